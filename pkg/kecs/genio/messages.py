"""
Messages for the :mod:`~kecs.genio` module.
"""
BAD_HEADER: str = "Line {line}: expected the header 'p el <n> <m>', got {text!r}."
MISSING_HEADER: str = "Edge list has no 'p el <n> <m>' header."
DUPLICATE_HEADER: str = "Line {line}: second header line {text!r}."
BAD_EDGE_LINE: str = "Line {line}: expected 'e <u> <v>' with 1-based vertices, got {text!r}."
EDGE_BEFORE_HEADER: str = "Line {line}: edge line before the header."
EDGE_LOOP: str = "Line {line}: loop at vertex {vertex}! Graphs are loopless (parallel edges are allowed)."
EDGE_VERTEX_RANGE: str = "Line {line}: vertex {vertex} is outside 1..{n}."
EDGE_COUNT: str = "Header announces {expected} edges, but {found} edge lines were found."
GRAPH6_LONG: str = "Long-form graph6 sizes (n ≥ 63) are not supported: {text!r}."
GRAPH6_INVALID: str = "Invalid graph6 string {text!r}: {reason}"
GRAPH6_EMPTY: str = "No graph6 string found."
GRAPH6_BYTE: str = "Invalid graph6 string {text!r}: byte {byte!r} at offset {offset} is outside 63..126."
UNKNOWN_NAME: str = "Unknown graph name {name!r}! Valid names are {valid}."
BAD_PARAMETER: str = "Graph name {name!r} needs {expected}."
UNKNOWN_EXTENSION: str = "Cannot infer the graph format of {path}; use a '.el' or '.g6' file."
PROBABILITY: str = "Edge probability must lie in [0, 1], got {p}."
NEGATIVE_PARAMETER: str = "{name} must be non-negative, got {value}."
CERTIFICATE_JSON: str = "Certificate is not valid JSON: {error}"
CERTIFICATE_FIELD: str = "Certificate field {field!r} is missing or malformed."
CERTIFICATE_SCHEMA: str = "Unsupported certificate schema {found!r}; expected {expected!r}."
REPORT_LINE: str = "{path}, line {line}: not a JSON object."
