from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class VerificationReport:
    """Outcome of one check.  ``witness`` holds exact values (series and
    Fractions are rendered as text on output); a failure must name one."""

    name: str
    params: dict
    status: str
    witness: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIP):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def ok(self):
        return self.status != FAIL


def status_of(failures):
    return PASS if not failures else FAIL
