#!/usr/bin/env python3

from setuptools import setup, find_packages

requirements = [
    "numpy",  # Sieving and marking passes over 1..x
    "matplotlib",  # for plotting figures
    "behave",  # for Behavior-Driven Development (BDD)
    "sympy"  # Independent permutation group orders in the BDD steps
]

setup(name='triangle-density',
      version='0.1.0.dev1',
      description='Finite-x experiments on the density of finite quotient orders of triangle groups',
      packages=find_packages(exclude=["features", "features.*"]),
      scripts=["scripts/triangle-density.py"],
      install_requires=requirements,
      python_requires=">=3.8"
      )
