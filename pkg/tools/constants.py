"""
Contains a list of globally defined constants.
"""

PROGRAM_NAME = "SubdivMG"
PROGRAM_VERSION = "1.0.0"

EXIT_SUCCESS = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

OUTPUT_FORMATS = ("csv", "json", "md")
SCHEDULES = ("uniform", "mixed")

DEFAULT_JSR_DEPTH = 8
DEFAULT_JSR_MAX_NODES = 200000
DEFAULT_TOLERANCE = 1e-7
DEFAULT_MAX_ITERATIONS = 1000

# columns of the table reports, in this order
TABLE_COLUMNS = ("table", "scheme", "dilation", "case", "n1", "n2", "iters", "conv_rate", "gen_degree", "seconds")
