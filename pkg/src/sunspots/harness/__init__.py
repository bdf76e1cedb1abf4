"""Corpora, campaign sweeps, reports and the command line."""
from .campaigns import CHECKERS, check_graph, recheck_report, verify_campaign
from .config import HarnessConfig
from .corpus import Corpus, exhaustive_corpus, generated_corpus, random_gnp, random_triangle_free
from .enumerate import CapExceeded, enumerate_graphs
from .report import Report, load_report, save_report

__all__ = [
    "CHECKERS", "CapExceeded", "Corpus", "HarnessConfig", "Report", "check_graph", "enumerate_graphs",
    "exhaustive_corpus", "generated_corpus", "load_report", "random_gnp", "random_triangle_free",
    "recheck_report", "save_report", "verify_campaign",
]
