"""Exception types shared across the package."""


class CallbriefError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(CallbriefError):
    """Invalid configuration value, unsupported language tag or missing resource."""


class EmptyDocumentError(CallbriefError):
    """Document has no scorable content (no sentence with at least one token)."""


class EmptyDistributionError(CallbriefError):
    """A probability distribution was requested for a sentence with no tokens."""


class UnknownTermError(CallbriefError, KeyError):
    """Term is absent from the vocabulary (or from both distributions)."""


class UndefinedScoreError(CallbriefError):
    """Recall score has an empty denominator (e.g. all references shorter than n)."""


class RuleParseError(CallbriefError):
    """Malformed line in a post-processing rule file."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason
