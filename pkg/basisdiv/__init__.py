from basisdiv import models

from .field import FieldDescriptor
from .algebra import AlgebraPresentation
from .algebra import Subspace
from .algebra import Vector
from .inputs import load_corpus
from .inputs import parse_algebra_file
from .inputs import write_algebra_file

import logging

class NullHandler(logging.Handler):
    def emit(self, record):
        pass

logger = logging.getLogger('basisdiv')
if len(logger.handlers) == 0:  # To ensure reload() doesn't add another one
    logger.addHandler(NullHandler())
