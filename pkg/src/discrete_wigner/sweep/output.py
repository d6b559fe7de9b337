"""
CSV and JSON writers for sweep rows.
"""
import csv
import json
import logging
import os
import tempfile

from discrete_wigner.base.errors import ValidationError

_LOG = logging.getLogger(__name__)

_FLOAT_FORMAT = "%.12g"


def _format(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return _FLOAT_FORMAT % value
    return str(value)


def header(rows, cfg):
    """
    :return: t, the W columns, the measure columns, then regime.
    :rtype: list(str)
    """
    return ["t"] + rows[0].table.column_names() + cfg.measure_columns + ["regime"]


def _write_csv(stream, rows, cfg):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header(rows, cfg))
    for row in rows:
        values = [_format(value) for value in row.values(cfg.measure_columns)]
        writer.writerow(values + [row.regime])


def _write_json(stream, rows, cfg):
    config = cfg.to_dict()
    # the thread count does not change the rows
    config.pop("workers", None)
    data = {"config": config, "rows": [row.to_dict(cfg.measure_columns) for row in rows]}
    json.dump(data, stream, indent=4, sort_keys=True)
    stream.write("\n")


_WRITERS = {"csv": _write_csv, "json": _write_json}


def series_path(path, label):
    """
    >>> series_path("out/fig11.csv", "qutrit")
    'out/fig11_qutrit.csv'

    :param str path: The path of the whole figure.
    :param str label: The series label.
    :return: The path of one series of a figure.
    :rtype: str
    """
    stem, ext = os.path.splitext(path)
    return "%s_%s%s" % (stem, label, ext)


def write_output(rows, cfg, path=None, fmt=None):
    """
    Write sweep rows to disk, replacing the file in one step.

    :param rows: The rows returned by `run_sweep`.
    :type rows: list(SweepRow)
    :param SweepConfig cfg: The config the rows were computed with.
    :param str path: The output path, defaults to the config output.
    :param str fmt: ``csv`` or ``json``, defaults to the config format.
    :return: The absolute path written.
    :rtype: str
    :raise ValidationError: If there are no rows, no path or an unknown format.
    :raise IOError: If the path cannot be written.
    """
    if not rows:
        raise ValidationError("Nothing to write")
    path = path or cfg.output
    if not path:
        raise ValidationError("No output path given")
    fmt = fmt or cfg.format
    try:
        writer = _WRITERS[fmt]
    except KeyError:
        raise ValidationError("Unknown format %r, expected one of %s" % (fmt, ", ".join(_WRITERS)))

    path = os.path.abspath(path)
    _LOG.info("Will save %d rows to %r", len(rows), path)

    # os.replace needs both paths on one filesystem
    handle, path_tmp = tempfile.mkstemp(
        suffix="." + fmt, prefix=".%s." % os.path.basename(path), dir=os.path.dirname(path)
    )
    try:
        with os.fdopen(handle, "w") as stream:
            writer(stream, rows, cfg)
        _LOG.debug("Applying changes...")
        os.replace(path_tmp, path)
    except BaseException:
        os.remove(path_tmp)
        raise

    _LOG.info("Saved to %r", path)
    return path
