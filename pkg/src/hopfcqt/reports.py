"""Uniform pass/fail reporting for verification sweeps.

Every verifier in the library (matched-pair axioms, cocycle identities, Hopf
axioms, CQT levels, necessary-condition battery) returns ConditionReports so
the CLI and the catalog can diff outcomes against expectations.
"""

PASS = "pass"
FAIL = "fail"
OUT_OF_WINDOW = "out-of-window"
SKIPPED = "skipped"


class ConditionReport:
    """Outcome of one named check: pass/fail/out-of-window/skipped.

    A fail always carries a witness; `checked` counts evaluated instances and
    `unevaluated` counts instances that needed values outside a declared
    window.
    """

    __slots__ = ("check", "status", "witness", "detail", "note", "checked", "unevaluated")

    def __init__(self, check, status, witness=None, detail=None, note=None,
                 checked=0, unevaluated=0):
        if status == FAIL and witness is None:
            raise ValueError("fail report without witness: %s" % check)
        self.check = check
        self.status = status
        self.witness = witness
        self.detail = detail
        self.note = note
        self.checked = checked
        self.unevaluated = unevaluated

    @property
    def passed(self):
        return self.status == PASS

    @property
    def failed(self):
        return self.status == FAIL

    def to_json(self):
        out = {"check": self.check, "status": self.status, "checked": self.checked}
        if self.witness is not None:
            out["witness"] = [str(w) for w in self.witness]
        if self.detail:
            out["detail"] = self.detail
        if self.note:
            out["note"] = self.note
        if self.unevaluated:
            out["unevaluated"] = self.unevaluated
        return out

    def __repr__(self):
        bits = ["%s: %s" % (self.check, self.status)]
        if self.witness is not None:
            bits.append("witness=%s" % (tuple(str(w) for w in self.witness),))
        if self.detail:
            bits.append(self.detail)
        return "<" + "  ".join(bits) + ">"


def all_passed(reports):
    "True when no report failed (skipped and out-of-window do not count as failures)."
    return not any(r.failed for r in reports)


def first_failure(reports):
    for r in reports:
        if r.failed:
            return r
    return None
