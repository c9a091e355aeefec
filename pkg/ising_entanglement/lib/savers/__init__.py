from .saver import CsvSaver, GenericSaver, JsonSaver, format_value, saver_for

__all__ = [
	"CsvSaver",
	"GenericSaver",
	"JsonSaver",
	"format_value",
	"saver_for",
]
