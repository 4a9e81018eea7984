import json
from collections import OrderedDict

from .output_base import OutputBase, json_value, SCHEMA_VERSION


class JsonOutput(OutputBase):
    u"""A single JSON document written on close.

    Layout (schema_version 1)::

        {"schema_version": 1, "metadata": {...}, "columns": [...],
         "rows": [{column: value, ...}, ...], "comments": [...], "final": {...}}

    Non-integral rationals are strings "p/q"; missing values are null.
    """
    def __init__(self, filename=None):
        super(JsonOutput, self).__init__(filename)
        self._metadata = OrderedDict()
        self._rows = []
        self._comments = []
        self._final = OrderedDict()

    def _write_metadata(self, key, value, comment=""):
        self._metadata[key] = json_value(value)

    def _write_comment(self, comment):
        self._comments.append(comment)

    def _write_parameters(self, values):
        self._rows.append(OrderedDict((name, json_value(v))
                                      for name, v in zip(self.column_names, values)))

    def _write_final(self, key, value, comment=""):
        self._final[key] = json_value(value)

    def document(self):
        return OrderedDict([
            ("schema_version", SCHEMA_VERSION),
            ("metadata", self._metadata),
            ("columns", self.column_names),
            ("rows", self._rows),
            ("comments", self._comments),
            ("final", self._final),
        ])

    def _close(self):
        self.stream.write(json.dumps(self.document(), indent=2) + "\n")
