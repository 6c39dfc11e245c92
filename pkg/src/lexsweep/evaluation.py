"""Precision, recall, F-measure, and fallout for an extracted lexicon.

All metrics are plain set-overlap ratios against the gold lexicon within
the universe.  Division-by-zero conventions are explicit: an empty
extraction scores precision 1.0 against an empty gold set and 0.0
otherwise, recall of an empty gold set is 1.0, and fallout is 0.0 when
the universe equals the gold set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import Lexicon
from .measures import Measure, MeasureSpec


@dataclass(frozen=True)
class MetricsRow:
    """One evaluated (measure, threshold) operating point.

    empty_extraction flags rows whose precision is the 0.0/1.0 convention
    value rather than a ratio.
    """

    measure: Measure
    threshold: int
    precision: float
    recall: float
    f_measure: float
    fallout: float
    extracted_size: int
    true_positives: int
    universe_size: int
    gold_size: int
    empty_extraction: bool = False


def f_measure(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0.0 when both are 0."""
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def evaluate(
    extracted: Lexicon, gold: Lexicon, universe: Lexicon, spec: MeasureSpec
) -> MetricsRow:
    """Score an extracted lexicon against the gold lexicon within the universe.

    Both extracted and gold must be subsets of the universe; fallout is the
    share of non-gold vocabulary wrongly extracted.
    """
    if not extracted <= universe:
        stray = sorted(extracted - universe)[:5]
        raise ValueError(f"extracted lexicon is not a subset of the universe: {stray}")
    if not gold <= universe:
        stray = sorted(gold - universe)[:5]
        raise ValueError(f"gold lexicon is not a subset of the universe: {stray}")

    true_positives = len(extracted & gold)
    if extracted:
        precision = true_positives / len(extracted)
        empty_extraction = False
    else:
        precision = 1.0 if not gold else 0.0
        empty_extraction = True
    recall = true_positives / len(gold) if gold else 1.0

    non_gold = len(universe) - len(gold)
    false_positives = len(extracted) - true_positives
    fallout = false_positives / non_gold if non_gold else 0.0

    return MetricsRow(
        measure=spec.kind,
        threshold=spec.threshold,
        precision=precision,
        recall=recall,
        f_measure=f_measure(precision, recall),
        fallout=fallout,
        extracted_size=len(extracted),
        true_positives=true_positives,
        universe_size=len(universe),
        gold_size=len(gold),
        empty_extraction=empty_extraction,
    )
