#!/usr/bin/env python
# -*- coding: utf-8 -*-

'''
Run with:

sudo python ./setup.py install
'''

import sys
from setuptools import setup, find_packages

if sys.version_info[:2] < (3, 8):
    raise Exception('This version of basisdiv needs Python 3.8 or later.')

setup(
    name='basisdiv',
    version='0.1.0',
    description='Exact semisimplicity and simplicity tests for finite-dimensional algebras through division bases',

    license='GPL-3.0',

    packages=find_packages(),
    package_data={
        'basisdiv': ['corpus/*.alg.json'],
    },

    zip_safe=False,

    test_suite="basisdiv.test",

    install_requires=[
        'numpy >= 1.17.0',
        'smart_open >= 1.5.0',
        'psutil'
    ],

    entry_points={
        'console_scripts': [
            'basisdiv = basisdiv.cli:main',
        ],
    },
    include_package_data=True,
)
