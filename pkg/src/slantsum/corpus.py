"""Article ingestion: markup stripping, sentence splitting, labeled datasets.

Articles come in as local HTML or plain-text files. Everything downstream
works on sentences, so this module turns raw files into a flat list of
labeled sentences and persists them as one JSON record per line.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

logger = logging.getLogger(__name__)


class DatasetError(ValueError):
    """Raised for malformed dataset files or label configuration problems."""


@dataclass(frozen=True)
class Article:
    article_id: str
    body: str
    title: str = ""
    source_label: str | None = None


@dataclass(frozen=True)
class LabeledSentence:
    article_id: str
    position: int
    text: str
    label: str


@dataclass
class Dataset:
    labels: tuple[str, str]
    sentences: list[LabeledSentence] = field(default_factory=list)

    def by_label(self) -> dict[str, list[LabeledSentence]]:
        groups: dict[str, list[LabeledSentence]] = {lab: [] for lab in self.labels}
        for s in self.sentences:
            groups[s.label].append(s)
        return groups


# ---------------------------------------------------------------------------
# markup stripping

_DROP_CONTENT_RE = re.compile(
    r"<(script|style|noscript)\b[^>]*>.*?</\1\s*>", re.IGNORECASE | re.DOTALL
)
_COMMENT_RE = re.compile(r"<!--.*?-->", re.DOTALL)
_TAG_RE = re.compile(r"<[^>]*>")
_WS_RE = re.compile(r"\s+")

# decoded after tag removal; &amp; must come last so "&amp;lt;" ends up as "&lt;"
_ENTITIES = [
    ("&lt;", "<"),
    ("&gt;", ">"),
    ("&quot;", '"'),
    ("&nbsp;", " "),
    ("&amp;", "&"),
]


def strip_markup(raw: str) -> str:
    """Reduce an HTML document (or plain text) to its visible text.

    Script/style/noscript content is dropped entirely, all other tags become
    a single space, the five common entities are decoded, and whitespace is
    collapsed. Plain text passes through unchanged apart from whitespace
    normalization.
    """
    text = _DROP_CONTENT_RE.sub(" ", raw)
    text = _COMMENT_RE.sub(" ", text)
    text = _TAG_RE.sub(" ", text)
    for entity, char in _ENTITIES:
        text = text.replace(entity, char)
    return _WS_RE.sub(" ", text).strip()


# ---------------------------------------------------------------------------
# sentence splitting

def _load_abbreviations() -> frozenset[str]:
    data = resources.files("slantsum.data").joinpath("abbreviations.txt").read_text("utf-8")
    return frozenset(line.strip().lower() for line in data.splitlines() if line.strip())


_ABBREVIATIONS = _load_abbreviations()

# '.', '!' or '?' followed by whitespace, then something that looks like a
# sentence opener (uppercase, opening quote, or digit)
_BOUNDARY_RE = re.compile(r"([.!?])(\s+)(?=[A-Z0-9\"'“‘])")
_TRAILING_TOKEN_RE = re.compile(r"([A-Za-z][A-Za-z.]*)$")


def split_sentences(body: str) -> list[str]:
    """Split plain text into sentences with a deterministic rule set.

    A boundary is '.', '!' or '?' followed by whitespace and an uppercase
    letter, opening quote, or digit. A '.' does not end a sentence when the
    word before it is a known abbreviation. Periods inside decimal numbers
    never match because the boundary requires whitespace after the mark.
    """
    text = _WS_RE.sub(" ", body).strip()
    if not text:
        return []

    sentences = []
    start = 0
    for m in _BOUNDARY_RE.finditer(text):
        if m.group(1) == ".":
            token = _TRAILING_TOKEN_RE.search(text[:m.start()])
            if token and token.group(1).rstrip(".").lower() in _ABBREVIATIONS:
                continue
        chunk = text[start:m.start() + 1].strip()
        if chunk:
            sentences.append(chunk)
        start = m.end()

    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


# ---------------------------------------------------------------------------
# dataset construction and persistence

def build_dataset(articles: list[Article]) -> Dataset:
    """Assemble a two-class sentence dataset from labeled articles.

    Sentences keep their article id and 0-based position. Articles whose
    bodies yield no sentences are skipped (with a warning). Label order is
    first-appearance order over the article sequence.
    """
    labels: list[str] = []
    for a in articles:
        if a.source_label is None:
            raise DatasetError(f"article {a.article_id!r} has no label")
        if a.source_label not in labels:
            labels.append(a.source_label)
    if len(labels) != 2:
        raise DatasetError(f"two classes required, got {len(labels)}: {labels}")

    sentences = []
    skipped = 0
    for a in articles:
        parts = split_sentences(a.body)
        if not parts:
            skipped += 1
            logger.warning("article %s produced no sentences, skipping", a.article_id)
            continue
        for i, text in enumerate(parts):
            sentences.append(LabeledSentence(a.article_id, i, text, a.source_label))
    if skipped:
        logger.warning("%d article(s) skipped for empty bodies", skipped)

    present = {s.label for s in sentences}
    if len(present) != 2:
        raise DatasetError("two classes required, got %d after skipping empty articles" % len(present))
    return Dataset(labels=(labels[0], labels[1]), sentences=sentences)


_RECORD_FIELDS = {"article_id", "position", "text", "label"}


def save_dataset(dataset: Dataset, path: str | Path) -> None:
    """Write one JSON record per sentence, ordered as stored."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as f:
        for s in dataset.sentences:
            rec = {"article_id": s.article_id, "position": s.position,
                   "text": s.text, "label": s.label}
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")


def load_dataset(path: str | Path) -> Dataset:
    """Read a dataset saved by save_dataset; inverse up to field identity."""
    path = Path(path)
    labels: list[str] = []
    sentences = []
    with path.open("r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as e:
                raise DatasetError(f"line {lineno}: malformed record ({e.msg})") from e
            if not isinstance(rec, dict) or set(rec) != _RECORD_FIELDS:
                raise DatasetError(f"line {lineno}: record must have exactly fields {sorted(_RECORD_FIELDS)}")
            if not isinstance(rec["position"], int) or rec["position"] < 0:
                raise DatasetError(f"line {lineno}: position must be a non-negative integer")
            if not isinstance(rec["text"], str) or not rec["text"].strip():
                raise DatasetError(f"line {lineno}: text must be a non-empty string")
            label = rec["label"]
            if label not in labels:
                if len(labels) == 2:
                    raise DatasetError(f"line {lineno}: unknown label {label!r}, dataset already has {labels}")
                labels.append(label)
            sentences.append(LabeledSentence(rec["article_id"], rec["position"], rec["text"], label))
    if len(labels) != 2:
        raise DatasetError(f"two classes required, got {len(labels)}")
    return Dataset(labels=(labels[0], labels[1]), sentences=sentences)


# ---------------------------------------------------------------------------
# file ingestion

_TITLE_RE = re.compile(r"<title[^>]*>(.*?)</title>", re.IGNORECASE | re.DOTALL)


def read_article(path: str | Path, article_id: str | None = None,
                 label: str | None = None) -> Article:
    """Load one article file; .html/.htm files are stripped of markup."""
    path = Path(path)
    raw = path.read_text("utf-8")
    title = ""
    if path.suffix.lower() in (".html", ".htm"):
        m = _TITLE_RE.search(raw)
        if m:
            title = _WS_RE.sub(" ", strip_markup(m.group(1))).strip()
        body = strip_markup(raw)
    else:
        body = _WS_RE.sub(" ", raw).strip()
    return Article(article_id=article_id or path.name, body=body,
                   title=title, source_label=label)


def fetch_article(url: str, article_id: str | None = None,
                  label: str | None = None, timeout: float = 30.0) -> Article:
    """Fetch one article from a URL; HTML responses are stripped to text.

    A convenience for one-off inputs. Reproducible corpora should be built
    from local files so the inputs stay frozen.
    """
    from urllib.request import urlopen

    with urlopen(url, timeout=timeout) as resp:
        raw = resp.read().decode("utf-8", errors="replace")
        content_type = resp.headers.get("Content-Type", "") if resp.headers else ""
    looks_like_html = ("html" in content_type.lower()
                       or url.lower().endswith((".html", ".htm"))
                       or raw.lstrip()[:1] == "<")
    title = ""
    if looks_like_html:
        m = _TITLE_RE.search(raw)
        if m:
            title = _WS_RE.sub(" ", strip_markup(m.group(1))).strip()
        body = strip_markup(raw)
    else:
        body = _WS_RE.sub(" ", raw).strip()
    return Article(article_id=article_id or url, body=body, title=title,
                   source_label=label)


def read_corpus_dir(root: str | Path, labels: tuple[str, str] | None = None) -> list[Article]:
    """Read a two-class corpus laid out as <root>/<label>/<article files>.

    Files are grouped by label (directory name) and read in sorted filename
    order; label order is `labels` when given, else sorted directory names.
    """
    root = Path(root)
    found = sorted(p.name for p in root.iterdir() if p.is_dir())
    if labels is None:
        label_order = found
    else:
        missing = [lab for lab in labels if lab not in found]
        if missing:
            raise DatasetError(f"label directories not found under {root}: {missing}")
        label_order = list(labels)
    if len(label_order) != 2:
        raise DatasetError(f"two classes required, got {len(label_order)}: {label_order}")

    articles = []
    for label in label_order:
        for path in sorted((root / label).iterdir()):
            if path.is_file():
                articles.append(read_article(path, article_id=f"{label}/{path.name}", label=label))
    return articles
