#coding: utf-8


u"""Small helpers shared by the command-line front end and the record loaders."""


import argparse
import os
from fractions import Fraction

import yaml

from .runtime.config import parse_int_list


class ParseExtraParameters(argparse.Action):

    u"""Extended command-line argument parser :class:`Action` which knows how to read arguments of the form ‘section.name=value’."""

    def __call__(self, parser, args, values, option_string=None):
        if getattr(args, self.dest, None) not in (None, argparse.SUPPRESS):
            parser.error(option_string + " appears several times")
        result = {}
        for arg in values:
            try:
                section, param_value = arg.split('.', 1)
                param, value = param_value.split('=', 1)
            except ValueError:
                parser.error(f"{option_string} expects section.name=value, not '{arg}'")
            result[(section, param)] = value
        setattr(args, self.dest, result)


def parse_rational(text):
    u"""Parse a lossless rational literal such as ``25/32``, ``-3`` or ``7 / 5760``.

    Decimal points are refused: every quantity in this package is exact.
    """
    text = str(text).strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"'{text}' is not a p/q rational literal")
    return Fraction(text.replace(" ", ""))


def rational_type(text):
    u"""argparse `type=` wrapper around :func:`parse_rational`."""
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got '{text}'")


def int_list_type(text):
    try:
        return parse_int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def mkdir(path):
    u"""Ensure that all the components in the `path` exist in the file system.

    A file blocking the creation of a directory raises :class:`ValueError`.
    """
    if not path or not path.strip():
        return
    if os.path.exists(path) and not os.path.isdir(path):
        raise ValueError("Tried to create dir %s but file with name exists already" % path)
    os.makedirs(path, exist_ok=True)


class UniqueKeyLoader(yaml.SafeLoader):
    """
    This is a YAML loader that raises an error if there are duplicate keys.

    A repeated Chern monomial in a manifold record would otherwise silently
    overwrite the earlier value.
    """
    def construct_mapping(self, node, deep=False):
        mapping = set()
        for key_node, _ in node.value:
            key = self.construct_object(key_node, deep=deep)
            if key in mapping:
                raise ValueError(f"Duplicate {key} key found in YAML.")
            mapping.add(key)
        return super().construct_mapping(node, deep)


def load_yaml(stream):
    """
    Load YAML (or JSON, which is a subset of it) from a stream, with a check for duplicate keys.
    """
    return yaml.load(stream, Loader=UniqueKeyLoader)
