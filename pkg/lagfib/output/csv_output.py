import csv
from collections import OrderedDict

from .output_base import OutputBase, render_value

comment_indicator = "_lagfib_comment_indicator_"


class CsvOutput(OutputBase):
    u"""Comma-separated table with ``#key=value`` metadata.

    The header line comes first and the rows follow it directly, so the
    table reads cleanly with :class:`csv.DictReader`.  Metadata, comments
    and final results are held back and appended as ``#key=value`` (or
    ``## text``) lines when the output closes.
    """
    _aliases = ["comma"]

    def __init__(self, filename=None):
        super(CsvOutput, self).__init__(filename)
        self._writer = None
        self._metadata = OrderedDict()
        self._final_metadata = OrderedDict()

    @property
    def writer(self):
        if self._writer is None:
            self._writer = csv.writer(self.stream, lineterminator="\n")
        return self._writer

    def _flush_metadata(self, metadata):
        for key, (value, comment) in metadata.items():
            if key.startswith(comment_indicator):
                self.stream.write("## %s\n" % value.strip())
            elif comment:
                self.stream.write('#{k}={v} #{c}\n'.format(k=key, v=render_value(value), c=comment))
            else:
                self.stream.write('#{k}={v}\n'.format(k=key, v=render_value(value)))

    def _begin_rows(self):
        if self._columns:
            self.writer.writerow(self.column_names)

    def _write_metadata(self, key, value, comment=''):
        self._metadata[key] = (value, comment)

    def _write_comment(self, comment):
        self._write_metadata(comment_indicator + "_%d" % len(self._metadata), comment)

    def _write_parameters(self, values):
        self.writer.writerow([render_value(v) for v in values])

    def _write_final(self, key, value, comment=''):
        self._final_metadata[key] = (value, comment)

    def _close(self):
        if not self.begun_rows:
            self._begin_rows()
            self.begun_rows = True
        self._flush_metadata(self._metadata)
        self._flush_metadata(self._final_metadata)
        self._metadata = OrderedDict()
        self._final_metadata = OrderedDict()
