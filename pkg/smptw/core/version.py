# smptw/core/version.py
# Package version and tool information

VERSION = "1.0.0"
TOOL_NAME = "smptw"
SCHEMA_VERSION = 1
