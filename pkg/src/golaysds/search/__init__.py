"""Orbit-union search for periodic Golay pairs."""

from .pipeline import (MatchResult, SearchReport, enumerate_candidates, match_join,
                       run_pipeline, translate_candidates)
from .plan import BlockPlan, SearchPlan, load_plan, plan_from_dict
from .records import CandidateRecord, complement_fingerprint
from .space import CombinationSpace

__all__ = [
    "BlockPlan", "CandidateRecord", "CombinationSpace", "MatchResult", "SearchPlan",
    "SearchReport", "complement_fingerprint", "enumerate_candidates", "load_plan",
    "match_join", "plan_from_dict", "run_pipeline", "translate_candidates",
]
