#coding: utf-8


u"""Definition of the :class:`Inifile` class used to configure lagfib runs.

A run can be configured from an ini file (``lagfib --ini run.ini ...``),
from ``-p section.name=value`` overrides, or both.  The sections read by
the command-line front end are::

    [runtime]
    verbosity = standard
    format = plain

    [census]
    require_integer_degree = T
    smp = 0

    [degdelta]
    theta_multiple = 1

    [series]
    c_odd_zero = T
"""


import os
import collections
import configparser
import io
from fractions import Fraction


class LagfibConfigurationError(configparser.Error):
    u"""Raised for a missing or malformed option in a lagfib configuration."""
    exit_status = 2


class IncludingConfigParser(configparser.ConfigParser):
    u"""A :class:`ConfigParser` which understands ``%include filename.ini`` lines.

    The included file is spliced in where the directive appears; it is
    assumed to end the current section.  Environment variables in values
    are expanded unless `no_expand_vars` is set.
    """

    def __init__(self, defaults=None, no_expand_vars=False):
        self.no_expand_vars = no_expand_vars
        configparser.ConfigParser.__init__(self,
                                   defaults=defaults,
                                   dict_type=collections.OrderedDict,
                                   strict=False,
                                   inline_comment_prefixes=(';', '#'),
                                   )

    def _read(self, fp, fpname):
        s = io.StringIO()
        for line in fp:
            if not self.no_expand_vars:
                line = os.path.expandvars(line)

            if line.lower().startswith('%include'):
                _, filename = line.split()
                filename = filename.strip('"').strip("'")
                if not os.path.exists(filename):
                    raise LagfibConfigurationError(f"Tried to include non-existent file {filename}")
                sub_ini = self.__class__(filename)
                sub_ini.write(s)
            else:
                s.write(line)

        s.seek(0)
        return super()._read(s, fpname)


class Inifile(IncludingConfigParser):

    u"""A dictionary of `(section, name) -> value` pairs read from an ini file.

    `filename` may be a path, a nested dict `{section: {name: value}}`,
    another :class:`Inifile` (copied), or None for an empty configuration.
    `override` is a mapping `(section, name) -> value` imposed after
    reading, which is how command-line ``-p`` options arrive.
    """

    def __init__(self, filename, defaults=None, override=None, no_expand_vars=False):
        IncludingConfigParser.__init__(self, defaults=defaults, no_expand_vars=no_expand_vars)

        if isinstance(filename, dict):
            for section, values in filename.items():
                self.add_section(section)
                for key, value in values.items():
                    self.set(section, key, str(value))
        elif isinstance(filename, Inifile):
            s = io.StringIO()
            filename.write(s)
            s.seek(0)
            self.read_file(s)
        elif filename is not None:
            if isinstance(filename, str) and not os.path.exists(filename):
                raise LagfibConfigurationError(f"Unable to open configuration file `{filename}'")
            self.read(filename)

        if override:
            for (section, name), value in override.items():
                if section == configparser.DEFAULTSECT:
                    self._defaults[name] = str(value)
                else:
                    if not self.has_section(section):
                        self.add_section(section)
                    self.set(section, name, str(value))

    def __iter__(self):
        u"""Iterate over `((section, name), value)` for every parameter."""
        return (((section, name), value) for section in self.sections()
                for name, value in self.items(section))

    def __getitem__(self, key: tuple):
        section, option = key
        return self.get(section, option)

    def __setitem__(self, key: tuple, value):
        section, option = key
        if not self.has_section(section):
            self.add_section(section)
        self.set(section, option, str(value))

    def _missing(self, kind, section, option):
        return LagfibConfigurationError(
            f"lagfib looked for {kind} option called '{option}' in the "
            f"'[{section}]' section, but it was not in the configuration")

    def get(self, section, option, raw=False, vars=None, fallback=configparser._UNSET):
        try:
            return IncludingConfigParser.get(self, section, option, raw=raw, vars=vars, fallback=fallback)
        except (configparser.NoSectionError, configparser.NoOptionError):
            if fallback is configparser._UNSET:
                raise self._missing("an", section, option)
            return fallback

    def _typed(self, kind, parse, section, option, fallback):
        if not self.has_option(section, option):
            if fallback is configparser._UNSET:
                raise self._missing(kind, section, option)
            return fallback
        value = self.get(section, option)
        try:
            return parse(value)
        except (ValueError, ZeroDivisionError):
            raise LagfibConfigurationError(
                f"Could not read [{section}] {option} = {value} as {kind} value")

    def getint(self, section, option, raw=False, vars=None, fallback=configparser._UNSET):
        return self._typed("an integer", lambda v: int(v.strip()), section, option, fallback)

    def getboolean(self, section, option, raw=False, vars=None, fallback=configparser._UNSET):
        u"""Interpret a parameter as a boolean, accepting T/F and y/n as well as the usual words."""
        return self._typed("a boolean (T/F)", parse_boolean, section, option, fallback)

    def getfraction(self, section, option, fallback=configparser._UNSET):
        u"""Read an exact rational written as an integer or ``p/q``."""
        return self._typed("a rational (p/q)", lambda v: Fraction(v.strip()), section, option, fallback)

    def getintlist(self, section, option, fallback=configparser._UNSET):
        u"""Read integers separated by commas and/or whitespace."""
        return self._typed("an integer list", parse_int_list, section, option, fallback)


def parse_boolean(value):
    value = str(value).strip().lower()
    if value in ['y', 'yes', 't', 'true', 'on', '1']:
        return True
    if value in ['n', 'no', 'f', 'false', 'off', '0']:
        return False
    raise ValueError(f"Unable to parse {value!r} into boolean form")


def parse_int_list(value):
    words = str(value).replace(",", " ").split()
    if not words:
        raise ValueError("Empty integer list")
    return [int(word) for word in words]
