"""Shared error base for the package.

Every domain error carries a stable machine-readable ``code``. The HTTP
server turns the code into a structured JSON body and the CLI prints it
as an ``error: <code>: <message>`` line, so both surfaces expose the
same taxonomy.
"""


class KgAtlasError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"
