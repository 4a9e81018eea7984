import abc
import os
import sys
from fractions import Fraction

from ..utils import mkdir

output_registry = {}

# Bumped only when the JSON document layout changes incompatibly.
SCHEMA_VERSION = 1


class OutputMetaclass(abc.ABCMeta):
    def __init__(cls, name, b, d):
        abc.ABCMeta.__init__(cls, name, b, d)
        if name == "OutputBase":
            return
        if not name.endswith("Output"):
            raise ValueError("Output classes must be named [Name]Output")
        config_name = name[:-len("Output")].lower()

        output_registry[config_name] = cls
        for alias in getattr(cls, "_aliases", ()):
            #Do not over-ride superclass aliases
            if alias not in output_registry:
                output_registry[alias] = cls


def render_value(value):
    u"""Text form of a result value: Fractions as p/q (integers bare), tuples comma-joined."""
    if value is None:
        return ""
    if isinstance(value, (tuple, list)):
        return ",".join(render_value(v) for v in value)
    return str(value)


def json_value(value):
    u"""JSON form of a result value: integral Fractions become ints, others "p/q" strings."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, (tuple, list)):
        return [json_value(v) for v in value]
    return value


class OutputBase(metaclass=OutputMetaclass):
    u"""Where command results go.

    A result is some metadata (the inputs), optionally a table of rows with
    named columns, comments, and final key/value results.  Subclasses decide
    the layout.  With no filename the output goes to whatever ``sys.stdout``
    is when the first line is written.
    """
    def __init__(self, filename=None):
        super(OutputBase, self).__init__()
        self.filename = filename
        self._file = None
        self._columns = []
        self.closed = False
        self.begun_rows = False

    @property
    def stream(self):
        if self._file is None:
            if self.filename:
                dirname, _ = os.path.split(self.filename)
                mkdir(dirname)
                self._file = open(self.filename, "w")
            else:
                return sys.stdout
        return self._file

    @property
    def columns(self):
        return self._columns

    def add_column(self, name, dtype=None, comment=""):
        if self.begun_rows:
            raise RuntimeError("Cannot add columns after rows have been written")
        self._columns.append((name, dtype, comment))

    @property
    def column_names(self):
        return [c[0] for c in self._columns]

    def _check_open(self, what):
        if self.closed:
            raise RuntimeError(f"Tried to write {what} to closed output")

    def comment(self, comment):
        self._check_open("a comment")
        self._write_comment(comment.strip('\n').replace("\n", " "))

    def metadata(self, key, value, comment=""):
        self._check_open("metadata")
        self._write_metadata(key, value, comment)

    def parameters(self, values):
        u"""Write one table row; there must be one value per column."""
        self._check_open("parameters")
        values = list(values)
        if len(values) != len(self._columns):
            raise ValueError(f"Tried to save {len(values)} values but there are "
                             f"{len(self._columns)} columns")
        if not self.begun_rows:
            self._begin_rows()
            self.begun_rows = True
        self._write_parameters(values)

    def record(self, mapping):
        u"""Write one row given as a mapping from column name to value."""
        self.parameters([mapping[name] for name in self.column_names])

    def final(self, key, value, comment=""):
        self._check_open("final info")
        self._write_final(key, value, comment)

    def close(self):
        if self.closed:
            return
        try:
            self._close()
        finally:
            if self._file is not None:
                self._file.close()
            else:
                self.stream.flush()
            self.closed = True

    def abort(self):
        u"""Close without writing anything further; a file this output created is removed."""
        if self.closed:
            return
        if self._file is not None:
            self._file.close()
            os.remove(self.filename)
        self.closed = True

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        if exc_type is None:
            self.close()
        else:
            self.abort()

    def _begin_rows(self):
        pass

    def _close(self):
        pass

    @abc.abstractmethod
    def _write_parameters(self, values):
        pass

    @abc.abstractmethod
    def _write_metadata(self, key, value, comment):
        pass

    @abc.abstractmethod
    def _write_comment(self, comment):
        pass

    @abc.abstractmethod
    def _write_final(self, key, value, comment):
        pass

    @classmethod
    def from_options(cls, options):
        return cls(filename=options.get("filename"))
