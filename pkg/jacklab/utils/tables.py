"""
Render lists of row models as csv, json or an aligned text table.
"""

import json
from typing import AbstractSet, Optional, Sequence, Type

import polars as pl
from pydantic import BaseModel

FORMATS = ("pretty", "csv", "json")


def _flatten(value):
    # csv cells and printed tables hold scalars only
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return value


def rows_to_dataframe(
    rows: Sequence[BaseModel],
    model: Optional[Type[BaseModel]] = None,
    flatten: bool = False,
    exclude: Optional[AbstractSet[str]] = None,
) -> pl.DataFrame:
    """
    Build a DataFrame with one row per model, columns in field order.

    Args:
        rows: Row models of one type
        model: Row type, used for the column names of an empty table
        flatten: Serialize list and dict cells to compact JSON text
        exclude: Field names to leave out
    """
    if not rows:
        names = model.model_fields if model is not None else ()
        columns = [name for name in names if name not in (exclude or ())]
        return pl.DataFrame({name: [] for name in columns}, schema={name: pl.Utf8 for name in columns})
    records = [row.model_dump(exclude=exclude) for row in rows]
    if flatten:
        records = [{k: _flatten(v) for k, v in record.items()} for record in records]
    return pl.DataFrame(records, infer_schema_length=None)


def render(
    rows: Sequence[BaseModel],
    fmt: str = "pretty",
    model: Optional[Type[BaseModel]] = None,
    exclude: Optional[AbstractSet[str]] = None,
) -> str:
    """
    Args:
        rows: Row models of one type
        fmt: One of ``pretty``, ``csv``, ``json``
        model: Row type, used for the header of an empty table
        exclude: Field names to leave out

    Returns:
        Rendered text ending without a trailing newline

    Raises:
        ValueError: for an unknown format
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format '{fmt}' (expected one of {', '.join(FORMATS)})")

    if fmt == "json":
        # One object per line; nested values stay structured.
        return "\n".join(row.model_dump_json(exclude=exclude) for row in rows)

    df = rows_to_dataframe(rows, model, flatten=True, exclude=exclude)
    if fmt == "csv":
        return df.write_csv().rstrip("\n")

    with pl.Config(
        tbl_rows=-1,
        tbl_cols=-1,
        fmt_str_lengths=200,
        tbl_hide_dataframe_shape=True,
        tbl_hide_column_data_types=True,
    ):
        return str(df)

