from .output_base import OutputBase, render_value


class PlainOutput(OutputBase):
    u"""Human-readable output, written line by line as results arrive.

    Inputs appear as ``# key = value``, tables as a tab-separated header
    and rows, and results as ``key = value``.
    """
    _aliases = ["text", "txt"]
    delimiter = "\t"

    def _line(self, text):
        self.stream.write(text + "\n")

    def _write_metadata(self, key, value, comment=""):
        self._line(f"# {key} = {render_value(value)}")

    def _write_comment(self, comment):
        self._line(comment)

    def _begin_rows(self):
        self._line(self.delimiter.join(self.column_names))

    def _write_parameters(self, values):
        self._line(self.delimiter.join(render_value(v) for v in values))

    def _write_final(self, key, value, comment=""):
        if comment:
            self._line(f"{key} = {render_value(value)}  # {comment}")
        else:
            self._line(f"{key} = {render_value(value)}")
