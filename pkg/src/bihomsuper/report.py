"""Pass/fail reports with counterexample witnesses."""

from dataclasses import dataclass, field

from .exact import format_rational

DEFAULT_WITNESS_CAP = 10


@dataclass
class Item:
    name: str
    passed: bool
    witnesses: list = field(default_factory=list)
    # total number of failing tuples, which may exceed len(witnesses)
    failures: int = 0

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "failures": self.failures,
            "witnesses": [{"indices": list(idx), "residual": [format_rational(x) for x in res]}
                          for idx, res in self.witnesses],
        }


class Report:
    """Outcome of a checker: one item per identity, overall = all items pass."""

    def __init__(self, subject, witness_cap=DEFAULT_WITNESS_CAP):
        self.subject = subject
        self.items = []
        self.metadata = {}
        self.witness_cap = witness_cap

    @property
    def passed(self):
        return all(item.passed for item in self.items)

    overall = passed

    def __bool__(self):
        return self.passed

    def add(self, name, failures):
        """Record an identity; ``failures`` is a list of (indices, residual)."""
        failures = list(failures)
        item = Item(name, not failures, failures[:self.witness_cap], len(failures))
        self.items.append(item)
        return item

    def extend(self, other, prefix=""):
        for item in other.items:
            self.items.append(Item(prefix + item.name, item.passed,
                                   list(item.witnesses), item.failures))
        for k, v in other.metadata.items():
            self.metadata.setdefault(k, v)
        return self

    def item(self, name):
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)

    def failed_items(self):
        return [it for it in self.items if not it.passed]

    def to_dict(self):
        return {
            "subject": self.subject,
            "overall": "pass" if self.passed else "fail",
            "items": [it.to_dict() for it in self.items],
            "metadata": dict(self.metadata),
        }

    def render(self):
        lines = ["%s: %s" % (self.subject, "PASS" if self.passed else "FAIL")]
        for it in self.items:
            lines.append("  [%s] %s" % ("ok" if it.passed else "FAIL", it.name))
            for idx, res in it.witnesses:
                lines.append("      at %s residual (%s)"
                             % (tuple(idx), ", ".join(format_rational(x) for x in res)))
            if it.failures > len(it.witnesses):
                lines.append("      ... %d failing tuples in total" % it.failures)
        for k, v in sorted(self.metadata.items()):
            lines.append("  note %s: %s" % (k, v))
        return "\n".join(lines)

    def __repr__(self):
        return "<Report %s %s>" % (self.subject, "pass" if self.passed else "fail")
