class HarnessError(Exception):
    """Base for harness failures."""


class VocabularyMismatch(HarnessError):
    """Input text contains a token the checkpoint's tokenizer has never seen."""
