# Command and output enums for the command-line runner.
import enum


class Command(str, enum.Enum):
    PAIRINGS = "pairings"
    GRAM = "gram"
    WEINGARTEN = "weingarten"
    TRACE_DISTANCE = "trace-distance"
    DESIGN_CHECK = "design-check"
    CONSTRAINTS = "constraints"
    IMPOSSIBILITY = "impossibility"
    BOUNDS = "bounds"
    APPROXIMATE_ORDER = "approximate-order"
    SCAN_ORBITS = "scan-orbits"
    SAMPLE_MOMENT = "sample-moment"
    HELSTROM = "helstrom"
    VERIFY_ALL = "verify-all"


TENSOR_COMMANDS = frozenset(
    {
        Command.TRACE_DISTANCE,
        Command.DESIGN_CHECK,
        Command.SCAN_ORBITS,
        Command.SAMPLE_MOMENT,
        Command.HELSTROM,
    }
)


class OutputFormat(str, enum.Enum):
    JSON = "json"
    CSV = "csv"
