from .plain_output import PlainOutput
from .csv_output import CsvOutput
from .json_output import JsonOutput
from .output_base import output_registry, OutputBase, SCHEMA_VERSION


def output_from_options(options):
    # figure out the type of output required
    format = options.get('format', 'plain')
    if format not in output_registry:
        known = '\n'.join('    %s - %s' % (f, output_registry[f].__name__) for f in output_registry)
        raise KeyError("I do not know what format you meant by '%s'. "
                       "I know about these format names:\n%s" % (format, known))

    output_class = output_registry[format]
    return output_class.from_options(options)
