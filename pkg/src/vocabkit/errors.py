"""Exception types shared across the engine and the HTTP service.

Each error carries a stable machine-readable ``code`` and the HTTP status
the service layer should map it to.
"""


class VocabError(Exception):
    code = "error"
    status = 400


class InvalidTermError(VocabError):
    """Raised when a raw term is empty after trimming."""

    code = "invalid_term"


class UnknownModelError(VocabError):
    """Raised when a session references a model id that is not loaded."""

    code = "unknown_model"


class TermConflictError(VocabError):
    """Raised when rejecting a term that is currently accepted."""

    code = "term_accepted"
    status = 409


class NotAcceptedError(VocabError):
    """Raised when removing a term that is not in the accepted set."""

    code = "not_accepted"


class SessionNotFoundError(VocabError):
    code = "session_not_found"
    status = 404


class InvalidParamsError(VocabError):
    code = "invalid_params"


class UnsupportedVersionError(VocabError):
    """Raised for snapshot payloads with an unknown format_version."""

    code = "unsupported_version"


class MalformedSnapshotError(VocabError):
    code = "invalid_payload"


class ModelFormatError(Exception):
    """A model file could not be parsed.

    Carries enough context (path, line number) for a CLI diagnostic that
    names the offending file and row.
    """

    def __init__(self, path, line_no, message):
        self.path = str(path)
        self.line_no = line_no
        self.message = message
        where = f"{self.path}:{line_no}" if line_no is not None else self.path
        super().__init__(f"{where}: {message}")
