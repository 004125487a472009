"""Forbidden-state guard synthesis for bounded Petri nets."""

from ._pnsup import (
    Controller,
    Error,
    ForbiddenSpec,
    InfeasibleCover,
    LimitError,
    NetDocument,
    NoSupervisorExists,
    ParseError,
    PetriNet,
    ReachabilityGraph,
    StateClassification,
    SynthesisResult,
    VerificationReport,
    build_graph,
    classify,
    closure,
    load_net,
    parse_guards,
    parse_net,
    parse_support_word,
    reduce_enabling,
    reduce_forbidding,
    render_guards,
    render_net,
    render_report,
    support_word,
    synthesize,
    to_dot,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
