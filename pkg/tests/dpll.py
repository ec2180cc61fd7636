"""Small DPLL solver for DIMACS CNF, used as an independent check on the
coloring exports.  Counter-based unit propagation with shortest-clause
branching; good enough for the graph instances in this suite, not a
general-purpose solver.
"""

from __future__ import annotations


def parse_dimacs(text):
    """Return (num_vars, clauses) where clauses are tuples of nonzero ints."""
    num_vars = None
    num_clauses = None
    clauses = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad header: {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        lits = [int(tok) for tok in line.split()]
        if lits[-1] != 0:
            raise ValueError(f"clause not zero-terminated: {line!r}")
        clause = tuple(lits[:-1])
        if not clause:
            raise ValueError("empty clause in input")
        clauses.append(clause)
    if num_vars is None:
        raise ValueError("missing p cnf header")
    if num_clauses != len(clauses):
        raise ValueError(f"header says {num_clauses} clauses, found {len(clauses)}")
    for cl in clauses:
        for lit in cl:
            if not 1 <= abs(lit) <= num_vars:
                raise ValueError(f"literal {lit} out of range")
    return num_vars, clauses


class _Solver:
    def __init__(self, num_vars, clauses, step_cap):
        self.num_vars = num_vars
        self.clauses = [tuple(cl) for cl in clauses]
        self.step_cap = step_cap
        self.steps = 0
        n = len(self.clauses)
        self.true_cnt = [0] * n
        self.false_cnt = [0] * n
        self.length = [len(cl) for cl in self.clauses]
        # branching prefers all-positive clauses (the at-least-one rows of a
        # coloring encoding) so the search mimics sequential vertex coloring
        self.all_pos = [all(lit > 0 for lit in cl) for cl in self.clauses]
        self.occ = [[] for _ in range(2 * num_vars + 2)]
        for ci, cl in enumerate(self.clauses):
            for lit in cl:
                self.occ[self._idx(lit)].append(ci)
        self.assign = [None] * (num_vars + 1)
        self.trail = []

    @staticmethod
    def _idx(lit):
        return 2 * abs(lit) + (1 if lit < 0 else 0)

    def _set(self, lit):
        """Assign lit true, update counters.  Returns False on conflict."""
        var = abs(lit)
        self.assign[var] = lit > 0
        self.trail.append(var)
        for ci in self.occ[self._idx(lit)]:
            self.true_cnt[ci] += 1
        ok = True
        for ci in self.occ[self._idx(-lit)]:
            self.false_cnt[ci] += 1
            if self.true_cnt[ci] == 0 and self.false_cnt[ci] == self.length[ci]:
                ok = False
        return ok

    def _unset_to(self, mark):
        while len(self.trail) > mark:
            var = self.trail.pop()
            val = self.assign[var]
            self.assign[var] = None
            lit = var if val else -var
            for ci in self.occ[self._idx(lit)]:
                self.true_cnt[ci] -= 1
            for ci in self.occ[self._idx(-lit)]:
                self.false_cnt[ci] -= 1

    def _unit_literal(self, ci):
        for lit in self.clauses[ci]:
            if self.assign[abs(lit)] is None:
                return lit
        raise AssertionError("unit clause with no free literal")

    def _propagate(self, lit):
        """Assign lit and ripple unit propagation.  Returns False on conflict."""
        queue = [lit]
        while queue:
            cur = queue.pop()
            val = self.assign[abs(cur)]
            if val is not None:
                if val != (cur > 0):
                    return False
                continue
            if not self._set(cur):
                return False
            # clauses that just lost a literal may have become unit
            for ci in self.occ[self._idx(-cur)]:
                if self.true_cnt[ci] == 0 and self.length[ci] - self.false_cnt[ci] == 1:
                    queue.append(self._unit_literal(ci))
        return True

    def _propagate_existing_units(self):
        for ci in range(len(self.clauses)):
            if self.true_cnt[ci]:
                continue
            open_lits = self.length[ci] - self.false_cnt[ci]
            if open_lits == 0:
                return False
            if open_lits == 1 and not self._propagate(self._unit_literal(ci)):
                return False
        return True

    def _pick(self):
        best = None
        best_key = None
        for ci in range(len(self.clauses)):
            if self.true_cnt[ci]:
                continue
            open_lits = self.length[ci] - self.false_cnt[ci]
            key = (not self.all_pos[ci], open_lits)
            if best_key is None or key < best_key:
                best, best_key = ci, key
        if best is None:
            return None
        return self._unit_literal(best)

    def search(self):
        self.steps += 1
        if self.steps > self.step_cap:
            raise RuntimeError(f"step cap {self.step_cap} exceeded")
        lit = self._pick()
        if lit is None:
            return True
        for branch in (lit, -lit):
            mark = len(self.trail)
            if self._propagate(branch) and self.search():
                return True
            self._unset_to(mark)
        return False


def solve(num_vars, clauses, step_cap=2_000_000):
    """Return a model as a dict {var: bool} if satisfiable, else None.

    Raises RuntimeError if the search exceeds step_cap branch steps, so a
    sick instance fails loudly instead of hanging the suite.
    """
    import sys

    solver = _Solver(num_vars, clauses, step_cap)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 10 * num_vars + 1000))
    try:
        if solver._propagate_existing_units() and solver.search():
            return {
                v: bool(solver.assign[v])
                for v in range(1, num_vars + 1)
                if solver.assign[v] is not None
            }
        return None
    finally:
        sys.setrecursionlimit(old_limit)


def solve_dimacs(text, step_cap=2_000_000):
    num_vars, clauses = parse_dimacs(text)
    return solve(num_vars, clauses, step_cap)


def decode_coloring(model, n_vertices, k):
    """Map a model of the coloring CNF back to {vertex: color}.

    Variable v*k + c + 1 true means vertex v gets color c.  When the model
    sets several colors true for one vertex (the encoding has no at-most-one
    clauses) the lowest color wins; unassigned variables count as False.
    """
    out = {}
    for v in range(n_vertices):
        for c in range(k):
            if model.get(v * k + c + 1, False):
                out[v] = c
                break
        else:
            raise ValueError(f"model leaves vertex {v} uncolored")
    return out
