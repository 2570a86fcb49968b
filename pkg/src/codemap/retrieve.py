"""Cross-language nearest-neighbour retrieval and ranking metrics.

Queries carry a side ("a2b" maps a-side elements onto b-side candidates,
"b2a" the reverse); candidates are filtered by their id prefix.  Ranked
lists are scored with average precision truncated at k, where the
denominator is min(|relevant|, k) so a fully retrieved short truth set
scores 1.0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SIDES = ("a2b", "b2a")


def cosine(u, v):
    """Cosine similarity; zero vectors have no direction and are
    rejected."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    norm_u = np.linalg.norm(u)
    norm_v = np.linalg.norm(v)
    if norm_u == 0.0 or norm_v == 0.0:
        raise ValueError("cosine undefined for zero vector")
    return float(u @ v) / (norm_u * norm_v)


@dataclass(frozen=True)
class Query:
    id: str
    vector: tuple
    side: str
    k: int = 10

    def __post_init__(self):
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}, "
                             f"got {self.side!r}")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if not any(x != 0.0 for x in self.vector):
            raise ValueError(f"query {self.id!r} has a zero vector")


def element_side(element_id):
    """Leading `a:` or `b:` tag of an element or token id."""
    side = element_id.partition(":")[0]
    if side not in ("a", "b"):
        raise ValueError(f"id {element_id!r} carries no a:/b: side tag")
    return side


def rank_neighbors(query_vec, ids, matrix, k):
    """Top-k candidates by cosine, ties broken by id.

    Zero-norm candidate rows have no cosine and are left out.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    query_vec = np.asarray(query_vec, dtype=float)
    query_norm = np.linalg.norm(query_vec)
    if query_norm == 0.0:
        raise ValueError("cosine undefined for zero vector")
    if len(ids) != matrix.shape[0]:
        raise ValueError("ids and matrix disagree on length")
    if len(ids) == 0:
        return []
    norms = np.linalg.norm(matrix, axis=1)
    keep = norms > 0.0
    sims = (matrix[keep] @ query_vec) / (norms[keep] * query_norm)
    kept_ids = [i for i, ok in zip(ids, keep) if ok]
    order = sorted(range(len(kept_ids)),
                   key=lambda j: (-sims[j], kept_ids[j]))
    return [(kept_ids[j], float(sims[j])) for j in order[:k]]


def run_queries(queries, ids, matrix):
    """Rank each query against the candidates on its target side."""
    by_side = {"a": [], "b": []}
    for row, element_id in enumerate(ids):
        by_side[element_side(element_id)].append(row)
    rankings = {}
    for query in queries:
        target = "b" if query.side == "a2b" else "a"
        rows = by_side[target]
        sub = matrix[rows] if rows else matrix[:0]
        sub_ids = [ids[r] for r in rows]
        rankings[query.id] = rank_neighbors(query.vector, sub_ids, sub,
                                            query.k)
    return rankings


def average_precision(ranked_ids, relevant, k):
    """AP@k = sum of P@r over relevant ranks r <= k, divided by
    min(|relevant|, k)."""
    if not relevant:
        raise ValueError("relevant set is empty")
    if k < 1:
        raise ValueError("k must be at least 1")
    hits = 0
    total = 0.0
    for rank, item in enumerate(ranked_ids[:k], start=1):
        if item in relevant:
            hits += 1
            total += hits / rank
    return total / min(len(relevant), k)


def precision_at(ranked_ids, relevant, k):
    if not relevant:
        raise ValueError("relevant set is empty")
    if k < 1:
        raise ValueError("k must be at least 1")
    hits = sum(1 for item in ranked_ids[:k] if item in relevant)
    return hits / k


@dataclass
class MappingReport:
    """Aggregated retrieval quality over a query set."""
    map_at_k: dict[int, float]
    precision_at_1: float
    n_queries: int
    skipped: list[str] = field(default_factory=list)


def evaluate_map(rankings, truth, ks=(1, 5, 10)):
    """Mean AP@k over the queries present in both rankings and truth.

    Queries without ground truth are reported as skipped, not scored.
    """
    if not ks or any(k < 1 for k in ks):
        raise ValueError("ks must be positive")
    scored = sorted(set(rankings) & set(truth))
    skipped = sorted(set(rankings) - set(truth))
    if not scored:
        raise ValueError("no query has ground truth")
    for qid in scored:
        if not truth[qid]:
            raise ValueError(f"query {qid!r} has an empty relevant set")
    map_at_k = {}
    for k in ks:
        values = [average_precision([i for i, _ in rankings[qid]],
                                    truth[qid], k) for qid in scored]
        map_at_k[k] = sum(values) / len(values)
    p1 = sum(precision_at([i for i, _ in rankings[qid]], truth[qid], 1)
             for qid in scored) / len(scored)
    return MappingReport(map_at_k=map_at_k, precision_at_1=p1,
                         n_queries=len(scored), skipped=skipped)


def diff_reference(rankings, reference):
    """Compare top-1 mappings with a reference source->target map.

    Returns dict with `new` (source absent from the reference),
    `agreeing` and `conflicting` lists; conflicts carry both targets.
    """
    new, agreeing, conflicting = [], [], []
    for source in sorted(rankings):
        ranked = rankings[source]
        if not ranked:
            continue
        top = ranked[0][0]
        if source not in reference:
            new.append((source, top))
        elif reference[source] == top:
            agreeing.append((source, top))
        else:
            conflicting.append((source, top, reference[source]))
    return {"new": new, "agreeing": agreeing, "conflicting": conflicting}


# ---------------------------------------------------------------------------
# file formats


def write_rankings(path, rankings, comments=()):
    """TSV: query-id, rank (1-based), target-id, cosine."""
    with open(path, "w", encoding="utf-8") as handle:
        for comment in comments:
            handle.write(f"# {comment}\n")
        for qid in sorted(rankings):
            for rank, (target, score) in enumerate(rankings[qid], start=1):
                handle.write(f"{qid}\t{rank}\t{target}\t{score:.9g}\n")


def read_rankings(path):
    rankings: dict[str, list] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise ValueError(f"{path}:{lineno}: expected 4 fields, "
                                 f"got {len(parts)}")
            qid, rank_text, target, score_text = parts
            try:
                rank = int(rank_text)
                score = float(score_text)
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: bad rank or score") from None
            ranked = rankings.setdefault(qid, [])
            if rank != len(ranked) + 1:
                raise ValueError(f"{path}:{lineno}: rank {rank} out of "
                                 f"order for query {qid!r}")
            ranked.append((target, score))
    return rankings


def write_truth(path, truth, comments=()):
    """TSV: query-id, relevant-id; one relevant item per line."""
    with open(path, "w", encoding="utf-8") as handle:
        for comment in comments:
            handle.write(f"# {comment}\n")
        for qid in sorted(truth):
            for item in sorted(truth[qid]):
                handle.write(f"{qid}\t{item}\n")


def read_truth(path):
    truth: dict[str, set] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 2 fields, "
                                 f"got {len(parts)}")
            truth.setdefault(parts[0], set()).add(parts[1])
    if not truth:
        raise ValueError(f"{path}: no ground-truth rows")
    return truth


def write_report(path, report, comments=()):
    """TSV of aggregate metrics: metric name, value."""
    with open(path, "w", encoding="utf-8") as handle:
        for comment in comments:
            handle.write(f"# {comment}\n")
        for k in sorted(report.map_at_k):
            handle.write(f"map@{k}\t{report.map_at_k[k]:.9g}\n")
        handle.write(f"p@1\t{report.precision_at_1:.9g}\n")
        handle.write(f"queries\t{report.n_queries}\n")
        handle.write(f"skipped\t{len(report.skipped)}\n")
        for qid in report.skipped:
            handle.write(f"skipped-query\t{qid}\n")


def read_report(path):
    map_at_k: dict[int, float] = {}
    p1 = None
    n_queries = 0
    skipped = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 2 fields, "
                                 f"got {len(parts)}")
            key, value = parts
            if key.startswith("map@"):
                map_at_k[int(key[4:])] = float(value)
            elif key == "p@1":
                p1 = float(value)
            elif key == "queries":
                n_queries = int(value)
            elif key == "skipped-query":
                skipped.append(value)
            elif key != "skipped":
                raise ValueError(f"{path}:{lineno}: unknown metric "
                                 f"{key!r}")
    if p1 is None or not map_at_k:
        raise ValueError(f"{path}: incomplete report")
    return MappingReport(map_at_k=map_at_k, precision_at_1=p1,
                         n_queries=n_queries, skipped=skipped)


def read_reference(path):
    """TSV mapping source-id to its expected top-1 target-id."""
    reference: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 2 fields, "
                                 f"got {len(parts)}")
            if parts[0] in reference:
                raise ValueError(f"{path}:{lineno}: duplicate source "
                                 f"{parts[0]!r}")
            reference[parts[0]] = parts[1]
    return reference


def write_diff(path, diff, comments=()):
    """TSV: status, source, current target, reference target or `-`."""
    with open(path, "w", encoding="utf-8") as handle:
        for comment in comments:
            handle.write(f"# {comment}\n")
        for source, top in diff["new"]:
            handle.write(f"new\t{source}\t{top}\t-\n")
        for source, top in diff["agreeing"]:
            handle.write(f"agreeing\t{source}\t{top}\t{top}\n")
        for source, top, expected in diff["conflicting"]:
            handle.write(f"conflicting\t{source}\t{top}\t{expected}\n")
