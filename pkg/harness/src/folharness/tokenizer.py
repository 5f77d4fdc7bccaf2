"""Whitespace tokenizer with a JSON-persisted vocabulary.

The corpus side is whitespace-tokenizable by construction (operator words and
predicate names are space-separated), so a plain split keeps the harness free
of any pretrained tokenizer download. Specials: pad=0, eos=1, unk=2.
"""
from __future__ import annotations

import json
from typing import Iterable

from .errors import VocabularyMismatch

PAD, EOS, UNK = 0, 1, 2
_SPECIALS = ("<pad>", "</s>", "<unk>")


class WhitespaceTokenizer:
    def __init__(self, tokens: list[str]):
        self.tokens = list(_SPECIALS) + [
            t for t in tokens if t not in _SPECIALS]
        self.ids = {token: i for i, token in enumerate(self.tokens)}

    @classmethod
    def from_texts(cls, texts: Iterable[str]) -> "WhitespaceTokenizer":
        seen = sorted({token for text in texts for token in text.split()})
        return cls(seen)

    @property
    def vocab_size(self) -> int:
        return len(self.tokens)

    def encode(self, text: str, strict: bool = False) -> list[int]:
        out = []
        for token in text.split():
            index = self.ids.get(token)
            if index is None:
                if strict:
                    raise VocabularyMismatch(
                        f"token {token!r} is not in the checkpoint vocabulary")
                index = UNK
            out.append(index)
        out.append(EOS)
        return out

    def decode(self, ids: Iterable[int]) -> str:
        words = []
        for index in ids:
            if index == EOS:
                break
            if index in (PAD, UNK):
                continue
            if 0 <= index < len(self.tokens):
                words.append(self.tokens[index])
        return " ".join(words)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump({"tokens": self.tokens}, handle, ensure_ascii=False)

    @classmethod
    def load(cls, path: str) -> "WhitespaceTokenizer":
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
        tokenizer = cls.__new__(cls)
        tokenizer.tokens = list(doc["tokens"])
        tokenizer.ids = {token: i for i, token in enumerate(tokenizer.tokens)}
        return tokenizer
