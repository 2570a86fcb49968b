"""Bilingual skip-gram (BiSkip) with negative sampling.

One shared embedding table holds both languages, tokens tagged `a:`/`b:`.
Each center token predicts its same-language window, and, through its
alignment links, the window around the linked position on the other side,
giving four prediction directions over a single table.  Single-threaded
training with a fixed seed is bit-reproducible.
"""

from __future__ import annotations

import warnings
from bisect import bisect_left
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

Pair = tuple[list[str], list[str], str]

LR_FLOOR_FACTOR = 1e-4
SIGMOID_CLAMP = 30.0
NOISE_POWER = 0.75


@dataclass(frozen=True)
class TrainConfig:
    dim: int = 100
    window: int = 5
    negatives: int = 5
    epochs: int = 10
    lr0: float = 0.025
    min_count: int = 1
    subsample: float = 1e-3
    seed: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if self.negatives < 1:
            raise ValueError("negatives must be >= 1")
        if self.lr0 <= 0:
            raise ValueError("lr0 must be positive")
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")
        if self.min_count < 1:
            raise ValueError("min_count must be >= 1")
        if self.subsample < 0:
            raise ValueError("subsample must be >= 0")


@dataclass(frozen=True)
class VocabEntry:
    id: int
    count: int


class Vocabulary:
    """Language-tagged token vocabulary with a count^0.75 noise law."""

    def __init__(self, counts: dict[str, int], min_count: int = 1):
        surviving = {t: c for t, c in counts.items() if c >= min_count}
        if not surviving:
            raise ValueError("no tokens survive min_count")
        order = sorted(surviving, key=lambda t: (-surviving[t], t))
        self._init_from(order, [surviving[t] for t in order])

    @classmethod
    def from_ordered(cls, tokens: list[str],
                     counts: list[int] | None = None) -> "Vocabulary":
        """Build preserving token order (used when loading saved tables).

        Unlike the counting constructor this permits an empty vocabulary,
        so that saved empty tables load back.
        """
        if len(set(tokens)) != len(tokens):
            raise ValueError("duplicate tokens")
        vocab = cls.__new__(cls)
        vocab._init_from(list(tokens), counts or [1] * len(tokens))
        return vocab

    def _init_from(self, tokens: list[str], counts: list[int]) -> None:
        self.tokens = tokens
        self.entries = {t: VocabEntry(i, c)
                        for i, (t, c) in enumerate(zip(tokens, counts))}
        self.counts = np.asarray(counts, dtype=np.float64)
        self.total_count = int(self.counts.sum())
        weights = self.counts ** NOISE_POWER
        total_weight = weights.sum()
        self.noise_dist = weights / total_weight if len(tokens) else weights
        self.noise_cdf = np.cumsum(self.noise_dist)
        if len(tokens):
            self.noise_cdf[-1] = 1.0

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self.entries

    def id_of(self, token: str) -> int | None:
        entry = self.entries.get(token)
        return entry.id if entry is not None else None


def build_vocab(streams, min_count: int = 1,
                lang_a: str | None = None) -> Vocabulary:
    """Count tokens over streams, tagging by language side.

    Streams whose language equals `lang_a` (default: the first stream's
    language) are tagged `a:`, all others `b:`.
    """
    if not streams:
        raise ValueError("no streams")
    if lang_a is None:
        lang_a = streams[0].language
    counts: dict[str, int] = {}
    for stream in streams:
        tag = "a:" if stream.language == lang_a else "b:"
        for token in stream.tokens:
            key = tag + token.text
            counts[key] = counts.get(key, 0) + 1
    return Vocabulary(counts, min_count)


def vocab_from_bitext(bitext: list[Pair], min_count: int = 1) -> Vocabulary:
    counts: dict[str, int] = {}
    for tokens_a, tokens_b, _ in bitext:
        for token in tokens_a:
            key = "a:" + token
            counts[key] = counts.get(key, 0) + 1
        for token in tokens_b:
            key = "b:" + token
            counts[key] = counts.get(key, 0) + 1
    return Vocabulary(counts, min_count)


@dataclass
class EmbeddingTable:
    input_vecs: np.ndarray   # |V| x d
    output_vecs: np.ndarray  # |V| x d

    @property
    def dim(self) -> int:
        return self.input_vecs.shape[1]

    def __post_init__(self):
        if self.input_vecs.shape != self.output_vecs.shape:
            raise ValueError("input/output shape mismatch")


def init_table(vocab_size: int, cfg: TrainConfig,
               rng: np.random.Generator) -> EmbeddingTable:
    """Standard word2vec init: small uniform inputs, zero outputs."""
    span = 0.5 / cfg.dim
    input_vecs = rng.uniform(-span, span, size=(vocab_size, cfg.dim))
    output_vecs = np.zeros((vocab_size, cfg.dim), dtype=np.float64)
    return EmbeddingTable(input_vecs, output_vecs)


def sigmoid(x):
    return 1.0 / (1.0 + np.exp(-np.clip(x, -SIGMOID_CLAMP, SIGMOID_CLAMP)))


def sgns_pair_loss(center: int, context: int, negatives,
                   table: EmbeddingTable) -> float:
    """-log sig(u_ctx . v) - sum_neg log sig(-u_neg . v)."""
    v = table.input_vecs[center]
    loss = -float(np.log(sigmoid(table.output_vecs[context] @ v)))
    for neg in negatives:
        loss -= float(np.log(sigmoid(-(table.output_vecs[neg] @ v))))
    return loss


def sgns_pair_grads(center: int, context: int, negatives,
                    table: EmbeddingTable) -> dict:
    """Analytic gradients of sgns_pair_loss per touched (matrix, id) slot.

    Keys are ("in", id) or ("out", id); duplicate negatives accumulate,
    matching the loss summation.
    """
    v = table.input_vecs[center]
    grads: dict = {}

    def add(key, value):
        if key in grads:
            grads[key] = grads[key] + value
        else:
            grads[key] = value.copy()

    u_ctx = table.output_vecs[context]
    s = sigmoid(u_ctx @ v)
    add(("in", center), (s - 1.0) * u_ctx)
    add(("out", context), (s - 1.0) * v)
    for neg in negatives:
        u_neg = table.output_vecs[neg]
        s_neg = sigmoid(u_neg @ v)
        add(("in", center), s_neg * u_neg)
        add(("out", neg), s_neg * v)
    return grads


def _keep_probability(count: float, total: int, subsample: float) -> float:
    # word2vec formula: (sqrt(f/t) + 1) * t/f for frequency f = count/total
    frequency = count / total
    ratio = subsample / frequency
    return min(1.0, (frequency / subsample) ** 0.5 * ratio + ratio)


def _subsample_side(tokens: list[str], tag: str, vocab: Vocabulary,
                    cfg: TrainConfig, rng: np.random.Generator):
    """Kept (original_position, vocab_id) pairs, in order.

    One rng draw per in-vocabulary occurrence keeps the stream of random
    numbers aligned across runs; subsample=0 skips drawing entirely.
    """
    kept_pos: list[int] = []
    kept_ids: list[int] = []
    scanned = 0
    for position, token in enumerate(tokens):
        vocab_id = vocab.id_of(tag + token)
        if vocab_id is None:
            continue
        scanned += 1
        if cfg.subsample > 0:
            p_keep = _keep_probability(vocab.counts[vocab_id],
                                       vocab.total_count, cfg.subsample)
            if rng.random() > p_keep:
                continue
        kept_pos.append(position)
        kept_ids.append(vocab_id)
    return kept_pos, kept_ids, scanned


def _link_map(links, transpose: bool) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for i, j in sorted(links):
        src, dst = (j, i) if transpose else (i, j)
        out.setdefault(src, []).append(dst)
    return out


class _Trainer:
    def __init__(self, vocab: Vocabulary, cfg: TrainConfig,
                 table: EmbeddingTable):
        self.vocab = vocab
        self.cfg = cfg
        self.table = table
        self.lr = cfg.lr0

    def update(self, center: int, context: int, rng: np.random.Generator):
        draws = rng.random(self.cfg.negatives)
        negatives = np.searchsorted(self.vocab.noise_cdf, draws, side="right")
        negatives = np.unique(negatives)
        negatives = negatives[negatives != context]
        ids = np.concatenate(([context], negatives))
        labels = np.zeros(len(ids))
        labels[0] = 1.0
        v_old = self.table.input_vecs[center].copy()
        outputs = self.table.output_vecs[ids]  # fancy index copies
        gains = (labels - sigmoid(outputs @ v_old)) * self.lr
        self.table.input_vecs[center] += gains @ outputs
        self.table.output_vecs[ids] += np.outer(gains, v_old)

    def train_pair(self, tokens_a, tokens_b, links,
                   rng: np.random.Generator):
        """All four directions for one pair; returns scanned token count."""
        cfg = self.cfg
        pos_a, ids_a, scanned_a = _subsample_side(tokens_a, "a:", self.vocab,
                                                  cfg, rng)
        pos_b, ids_b, scanned_b = _subsample_side(tokens_b, "b:", self.vocab,
                                                  cfg, rng)
        a_to_b = _link_map(links, transpose=False)
        b_to_a = _link_map(links, transpose=True)
        sides = ((pos_a, ids_a, pos_b, ids_b, a_to_b),
                 (pos_b, ids_b, pos_a, ids_a, b_to_a))
        for own_pos, own_ids, other_pos, other_ids, cross in sides:
            for idx, center in enumerate(own_ids):
                reach = int(rng.integers(1, cfg.window + 1))
                lo = max(0, idx - reach)
                for ctx_idx in range(lo, min(len(own_ids), idx + reach + 1)):
                    if ctx_idx != idx:
                        self.update(center, own_ids[ctx_idx], rng)
                for j in cross.get(own_pos[idx], ()):
                    q = bisect_left(other_pos, j)
                    aligned_present = q < len(other_pos) and other_pos[q] == j
                    lo = max(0, q - reach)
                    hi = min(len(other_ids), q + reach + (1 if aligned_present else 0))
                    for ctx_idx in range(lo, hi):
                        if aligned_present and ctx_idx == q:
                            continue  # the link partner is the surrogate center
                        self.update(center, other_ids[ctx_idx], rng)
        return scanned_a + scanned_b


def train_biskip(bitext: list[Pair], links, cfg: TrainConfig,
                 vocab: Vocabulary | None = None,
                 threads: int = 1) -> EmbeddingTable:
    """Train shared bilingual embeddings over an aligned bitext.

    `vocab` defaults to one built from the bitext itself with
    cfg.min_count.  The learning rate decays linearly from lr0 to
    lr0 * 1e-4 over all in-vocabulary token occurrences, frozen within
    each pair.  threads > 1 switches to asynchronous unsynchronized
    updates: faster, converges, but not bit-reproducible.
    """
    if vocab is None:
        if not bitext:
            raise ValueError("empty bitext and no vocabulary")
        vocab = vocab_from_bitext(bitext, cfg.min_count)
    rng = np.random.default_rng(cfg.seed)
    table = init_table(len(vocab), cfg, rng)
    if not bitext or cfg.epochs == 0:
        return table
    if not any(link_set.links for link_set in links):
        warnings.warn("no alignment links; training monolingually",
                      stacklevel=2)
    links_by_pair = {link_set.pair_id: link_set.links for link_set in links}
    total = 0
    for tokens_a, tokens_b, _ in bitext:
        total += sum(1 for t in tokens_a if ("a:" + t) in vocab)
        total += sum(1 for t in tokens_b if ("b:" + t) in vocab)
    if total == 0:
        return table
    schedule_span = cfg.epochs * total
    trainer = _Trainer(vocab, cfg, table)

    if threads > 1:
        _train_hogwild(trainer, bitext, links_by_pair, threads,
                       schedule_span)
        return table

    processed = 0
    for _ in range(cfg.epochs):
        for tokens_a, tokens_b, pair_id in bitext:
            trainer.lr = max(cfg.lr0 * (1.0 - processed / schedule_span),
                             cfg.lr0 * LR_FLOOR_FACTOR)
            processed += trainer.train_pair(
                tokens_a, tokens_b, links_by_pair.get(pair_id, frozenset()),
                rng)
    if not (np.isfinite(table.input_vecs).all()
            and np.isfinite(table.output_vecs).all()):
        raise FloatingPointError("non-finite values after training")
    return table


def _train_hogwild(trainer: _Trainer, bitext, links_by_pair, threads: int,
                   schedule_span: int) -> None:
    """Asynchronous SGD over shared arrays; races are tolerated."""
    progress = [0]

    def work(chunk_and_seed):
        chunk, seed = chunk_and_seed
        rng = np.random.default_rng(seed)
        for tokens_a, tokens_b, pair_id in chunk:
            trainer.lr = max(
                trainer.cfg.lr0 * (1.0 - progress[0] / schedule_span),
                trainer.cfg.lr0 * LR_FLOOR_FACTOR)
            progress[0] += trainer.train_pair(
                tokens_a, tokens_b, links_by_pair.get(pair_id, frozenset()),
                rng)

    size = (len(bitext) + threads - 1) // threads
    for epoch in range(trainer.cfg.epochs):
        chunks = [(bitext[k:k + size], trainer.cfg.seed + epoch * threads + w)
                  for w, k in enumerate(range(0, len(bitext), size))]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, chunks))


# ---------------------------------------------------------------------------
# text format


def save_embeddings(table: EmbeddingTable, vocab: Vocabulary, path,
                    comments=()) -> None:
    """Header `<|V|> <d>`, then `token v1 ... vd` rows (input vectors)."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{len(vocab)} {table.dim}")
    for row, token in enumerate(vocab.tokens):
        values = " ".join(f"{x:.9g}" for x in table.input_vecs[row])
        lines.append(f"{token} {values}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def load_embeddings(path) -> tuple[EmbeddingTable, Vocabulary]:
    """Inverse of save_embeddings; counts are lost, so the loaded
    vocabulary reports count 1 (uniform noise) for every token."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    body = [(n, line) for n, line in enumerate(lines, start=1)
            if line and not line.startswith("#")]
    if not body:
        raise ValueError(f"{path}: missing header")
    header_no, header = body[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"{path}:{header_no}: header must be `<|V|> <d>`")
    try:
        size, dim = int(parts[0]), int(parts[1])
    except ValueError as err:
        raise ValueError(f"{path}:{header_no}: bad header: {err}") from None
    rows = body[1:]
    if len(rows) != size:
        raise ValueError(f"{path}: header promises {size} rows, "
                         f"found {len(rows)}")
    tokens: list[str] = []
    vectors = np.zeros((size, dim), dtype=np.float64)
    for k, (lineno, line) in enumerate(rows):
        fields = line.split()
        if len(fields) != dim + 1:
            raise ValueError(f"{path}:{lineno}: expected token + {dim} "
                             f"values, got {len(fields)} fields")
        tokens.append(fields[0])
        try:
            vectors[k] = [float(x) for x in fields[1:]]
        except ValueError as err:
            raise ValueError(f"{path}:{lineno}: bad value: {err}") from None
    vocab = Vocabulary.from_ordered(tokens)
    table = EmbeddingTable(vectors, np.zeros_like(vectors))
    return table, vocab
