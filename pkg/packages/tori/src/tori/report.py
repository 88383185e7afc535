import json
from collections.abc import Sequence
from typing import Any

from cohomology import CohomologyProfile
from glattice import GLattice, Subgroup
from linalg import FiniteAbelianGroup, IntMatrix

from .rationality import CohomologyFact, Fact, RationalityReport, ResolutionFact, VerdictFact
from .resolution import Resolution
from .verdict import (
    Certificate,
    IsomorphismWitness,
    Obstruction,
    PermutationWitness,
    Refutation,
    SearchBounds,
    StableEquivalenceWitness,
    StablePermutationWitness,
    SummandWitness,
    Verdict,
)

type Json = dict[str, Any]

DEGREE_NAMES = {"h1": "H^1", "tate_minus1": "H^-1"}


def dump_json(document: Json) -> str:
    return json.dumps(document, indent=2) + "\n"


def _subgroup(H: Subgroup | None) -> list[int] | None:
    return None if H is None else list(H.member_indices)


def _subgroups(summands: Sequence[Subgroup]) -> list[list[int]]:
    return [list(H.member_indices) for H in summands]


def _group(A: FiniteAbelianGroup | None) -> Json | None:
    return None if A is None else {"free_rank": A.free_rank, "torsion": list(A.torsion)}


def _matrix(X: IntMatrix) -> list[list[int]]:
    return X.to_rows()


def lattice_json(name: str, M: GLattice) -> Json:
    return {
        "name": name,
        "rank": M.rank,
        "group_order": M.group.order,
        "generators": [_matrix(M.act(g)) for g in M.group.generator_indices],
    }


def profile_json(profile: CohomologyProfile) -> list[Json]:
    return [
        {"subgroup": _subgroup(entry.subgroup), "order": entry.subgroup.order, "group": _group(entry.group)}
        for entry in profile.entries
    ]


def bounds_json(bounds: SearchBounds | None, searched: int) -> Json | None:
    if bounds is None:
        return None
    return {
        "rank_bound": bounds.rank_bound,
        "coeff_bound": bounds.coeff_bound,
        "search_limit": bounds.search_limit,
        "searched": searched,
    }


def certificate_json(certificate: Certificate | None) -> Json | None:
    match certificate:
        case None:
            return None
        case IsomorphismWitness(matrix=X):
            return {"kind": "isomorphism", "matrix": _matrix(X)}
        case PermutationWitness(summands=summands, matrix=X):
            return {"kind": "permutation", "summands": _subgroups(summands), "matrix": _matrix(X)}
        case StablePermutationWitness(added=added, target=target, matrix=X):
            return {
                "kind": "stably_permutation",
                "added": _subgroups(added),
                "target": _subgroups(target),
                "matrix": _matrix(X),
            }
        case SummandWitness(summands=summands, section=s, retraction=p, complement=C, inclusion=i):
            return {
                "kind": "summand",
                "summands": _subgroups(summands),
                "section": _matrix(s),
                "retraction": _matrix(p),
                "complement_rank": C.rank,
                "inclusion": _matrix(i),
            }
        case StableEquivalenceWitness(left_added=left, right_added=right, matrix=X):
            return {
                "kind": "stable_equivalence",
                "left_added": _subgroups(left),
                "right_added": _subgroups(right),
                "matrix": _matrix(X),
            }
        case Obstruction(invariant=invariant, subgroup=H, found=found, detail=detail):
            return {
                "kind": "obstruction",
                "invariant": invariant,
                "subgroup": _subgroup(H),
                "found": _group(found),
                "detail": detail,
            }
        case Refutation(candidates=candidates):
            return {
                "kind": "refutation",
                "candidates": [
                    {"summands": _subgroups(summands), "obstruction": certificate_json(reason)}
                    for summands, reason in candidates
                ],
            }
        case _:
            raise TypeError(f"Unhandled certificate: {certificate}")


def verdict_json(verdict: Verdict) -> Json:
    return {
        "status": verdict.status,
        "certificate": certificate_json(verdict.certificate),
        "bounds": bounds_json(verdict.bounds, verdict.searched),
    }


def resolution_json(r: Resolution, verified: bool) -> Json:
    return {
        "middle": [{"subgroup": _subgroup(H), "multiplicity": count} for H, count in r.middle_description],
        "middle_rank": r.middle.rank,
        "quotient_rank": r.quotient.rank,
        "embedding": _matrix(r.embedding),
        "projection": _matrix(r.projection),
        "verified": verified,
    }


def fact_json(fact: Fact) -> Json:
    match fact:
        case VerdictFact(question=question, subject=subject, verdict=verdict):
            return {"kind": "verdict", "question": question, "subject": subject, "verdict": verdict_json(verdict)}
        case ResolutionFact(middle_description=description, middle_rank=m, quotient_rank=q, verified=verified):
            return {
                "kind": "resolution",
                "middle": [{"subgroup": _subgroup(H), "multiplicity": count} for H, count in description],
                "middle_rank": m,
                "quotient_rank": q,
                "verified": verified,
            }
        case CohomologyFact(degree=degree, subject=subject, subgroup=H, group=A):
            return {
                "kind": "cohomology",
                "degree": degree,
                "subject": subject,
                "subgroup": _subgroup(H),
                "group": _group(A),
            }
        case _:
            raise TypeError(f"Unhandled fact: {fact}")


def report_json(report: RationalityReport) -> Json:
    return {"level": report.level, "justification": [fact_json(fact) for fact in report.justification]}


def _summands_text(summands: Sequence[Subgroup]) -> str:
    return " + ".join(f"Z[G/{H}]" for H in summands) or "0"


def certificate_text(certificate: Certificate | None) -> str:
    match certificate:
        case None:
            return "no certificate"
        case IsomorphismWitness(matrix=X):
            return f"isomorphism {X.to_rows()}"
        case PermutationWitness(summands=summands, matrix=X):
            return f"isomorphic to {_summands_text(summands)} via {X.to_rows()}"
        case StablePermutationWitness(added=added, target=target, matrix=X):
            return f"M + {_summands_text(added)} isomorphic to {_summands_text(target)} via {X.to_rows()}"
        case SummandWitness(summands=summands, complement=C):
            return f"direct summand of {_summands_text(summands)} with a rank {C.rank} complement"
        case StableEquivalenceWitness(left_added=left, right_added=right, matrix=X):
            return f"M1 + {_summands_text(left)} isomorphic to M2 + {_summands_text(right)} via {X.to_rows()}"
        case Obstruction(invariant=invariant, subgroup=H, found=found, detail=detail):
            where = "" if H is None else f" at {H}"
            value = "" if found is None else f" = {found}"
            return f"{invariant}{where}{value} ({detail})"
        case Refutation(candidates=candidates):
            return f"all {len(candidates)} candidate permutation lattices refuted"
        case _:
            raise TypeError(f"Unhandled certificate: {certificate}")


def verdict_text(verdict: Verdict) -> str:
    text = f"{verdict.status}: {certificate_text(verdict.certificate)}"
    if verdict.status == "Unknown" and verdict.bounds is not None:
        b = verdict.bounds
        text += f" (rank bound {b.rank_bound}, coeff bound {b.coeff_bound}, {verdict.searched} searched)"
    return text


def fact_text(fact: Fact) -> str:
    match fact:
        case VerdictFact(question=question, subject=subject, verdict=verdict):
            return f"{question.replace('_', ' ')} ({subject} lattice): {verdict_text(verdict)}"
        case ResolutionFact(middle_description=description, middle_rank=m, quotient_rank=q, verified=verified):
            middle = " + ".join(f"{count} x Z[G/{H}]" for H, count in description) or "0"
            state = "verified" if verified else "NOT verified"
            return f"flabby resolution: middle {middle} (rank {m}), quotient rank {q}, {state}"
        case CohomologyFact(degree=degree, subject=subject, subgroup=H, group=A):
            return f"{DEGREE_NAMES[degree]}({H}, {subject} lattice) = {A}"
        case _:
            raise TypeError(f"Unhandled fact: {fact}")


def lattice_text(name: str, M: GLattice) -> list[str]:
    lines = [f"lattice {name}: rank {M.rank}, group of order {M.group.order}"]
    lines.extend(f"  generator {M.act(g).to_rows()}" for g in M.group.generator_indices)
    return lines


def profile_text(degree: str, profile: CohomologyProfile) -> list[str]:
    return [f"{DEGREE_NAMES[degree]}:"] + [f"  {entry.subgroup}: {entry.group}" for entry in profile.entries]


def report_text(report: RationalityReport) -> list[str]:
    return [f"level: {report.level}"] + [f"  - {fact_text(fact)}" for fact in report.justification]
