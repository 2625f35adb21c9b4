import sys

from basisdiv.cli import main

sys.exit(main())
