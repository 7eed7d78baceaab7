"""Independent brute-force references the fast implementations are checked against."""

from __future__ import annotations

import itertools
from fractions import Fraction


# -- mining ----------------------------------------------------------------


def all_subsequences(seq, max_len):
    out = set()
    for k in range(1, min(len(seq), max_len) + 1):
        for idx in itertools.combinations(range(len(seq)), k):
            out.add(tuple(seq[i] for i in idx))
    return out


def contains(pattern, seq) -> bool:
    """Gapped, ordered containment by explicit index search."""
    pos = 0
    for item in pattern:
        while pos < len(seq) and seq[pos] != item:
            pos += 1
        if pos == len(seq):
            return False
        pos += 1
    return True


def brute_support(pattern, cluster) -> Fraction:
    return Fraction(sum(contains(pattern, s) for s in cluster), len(cluster))


def brute_force_mine(cluster, sigma, call_items, max_len=12):
    """Every subsequence of every sequence, filtered by support, call
    containment and maximality. Returns {pattern: support}."""
    sigma = Fraction(str(sigma)) if not isinstance(sigma, Fraction) else sigma
    candidates = set()
    for seq in cluster:
        candidates |= all_subsequences(seq, max_len)
    frequent = {}
    for p in candidates:
        if not any(x in call_items for x in p):
            continue
        s = brute_support(p, cluster)
        if s >= sigma:
            frequent[p] = s
    return {
        p: s
        for p, s in frequent.items()
        if not any(q != p and len(q) > len(p) and contains(p, q) for q in frequent)
    }


# -- reaching definitions over loop-free code ------------------------------


class StatementNumbering:
    """Pre-order numbering of statement headers, mirroring the PDG node order."""

    def __init__(self, stmts):
        self.nodes = []  # (kind tag, ast)
        self.ids = {}
        self._number(stmts)

    def _new(self, tag, ast):
        self.ids[(tag, id(ast))] = len(self.nodes)
        self.nodes.append((tag, ast))

    def _number(self, stmts):
        for s in stmts:
            self._stmt(s)

    def _stmt(self, s):
        if s.kind == "block":
            self._number(s.children)
        elif s.kind == "empty":
            pass
        elif s.kind == "if":
            self._new("if", s)
            for branch in s.children[1:]:
                self._stmt(branch)
        elif s.kind == "try":
            self._new("try", s)
            for child in s.children:
                if child.kind in ("resources", "block"):
                    self._number(child.children)
            for child in s.children:
                if child.kind == "catch":
                    self._new("catch", child)
                    self._stmt(child.children[1])
            for child in s.children:
                if child.kind == "finally":
                    self._new("finally", child)
                    self._stmt(child.children[0])
        else:
            self._new("simple", s)

    def id_of(self, tag, ast):
        return self.ids[(tag, id(ast))]


def _traces(stmts, num):
    """All execution traces of a statement list: (ids, finished_normally)."""
    results = [((), True)]
    for s in stmts:
        nxt = []
        for trace, alive in results:
            if not alive:
                nxt.append((trace, alive))
                continue
            for t2, a2 in _stmt_traces(s, num):
                nxt.append((trace + t2, a2))
        results = nxt
    return results


def _stmt_traces(s, num):
    if s.kind == "block":
        return _traces(s.children, num)
    if s.kind == "empty":
        return [((), True)]
    if s.kind == "if":
        p = num.id_of("if", s)
        out = [((p,) + t, a) for t, a in _stmt_traces(s.children[1], num)]
        if len(s.children) == 3:
            out += [((p,) + t, a) for t, a in _stmt_traces(s.children[2], num)]
        else:
            out.append(((p,), True))
        return out
    if s.kind == "try":
        return _try_traces(s, num)
    sid = num.id_of("simple", s)
    return [((sid,), s.kind not in ("return", "throw"))]


def _try_traces(s, num):
    t = num.id_of("try", s)
    inner = []
    for child in s.children:
        if child.kind in ("resources", "block"):
            inner.extend(child.children)
    body = [((t,) + tr, a) for tr, a in _traces(inner, num)]
    completions = [(tr, a) for tr, a in body]
    for child in s.children:
        if child.kind != "catch":
            continue
        h = num.id_of("catch", child)
        handler = _stmt_traces(child.children[1], num)
        for tr, _ in body:
            # an exception may leave the try block after any executed statement
            for cut in range(1, len(tr) + 1):
                for ht, ha in handler:
                    completions.append((tr[:cut] + (h,) + ht, ha))
    fin = [c for c in s.children if c.kind == "finally"]
    if not fin:
        return list(dict.fromkeys(completions))
    f = num.id_of("finally", fin[0])
    ftraces = _stmt_traces(fin[0].children[0], num)
    out = []
    for tr, a in completions:
        if not a:
            out.append((tr, a))
            continue
        for ft, fa in ftraces:
            out.append((tr + (f,) + ft, fa))
    return list(dict.fromkeys(out))


def reaching_def_edges(stmts, defs, uses):
    """Data edges (a, b, v) found by enumerating every path.

    ``defs``/``uses`` map node id to variable sets; the oracle only decides
    which definitions reach which uses.
    """
    num = StatementNumbering(stmts)
    edges = set()
    for trace, _ in _traces(stmts, num):
        for j, b in enumerate(trace):
            for v in uses[b]:
                for i in range(j - 1, -1, -1):
                    a = trace[i]
                    if v in defs[a]:
                        edges.add((a, b, v))
                        break
    return edges, num


def reachable_ids(stmts):
    num = StatementNumbering(stmts)
    seen = set()
    for trace, _ in _traces(stmts, num):
        seen.update(trace)
    return seen, num


def control_edges(stmts):
    """Control edges from AST nesting alone."""
    num = StatementNumbering(stmts)
    edges = set()

    def visit(stmt_list, controller):
        for s in stmt_list:
            if s.kind == "block":
                visit(s.children, controller)
                continue
            if s.kind == "empty":
                continue
            if s.kind == "if":
                p = num.id_of("if", s)
                if controller is not None:
                    edges.add((controller, p))
                for branch in s.children[1:]:
                    visit([branch], p)
            elif s.kind == "try":
                t = num.id_of("try", s)
                if controller is not None:
                    edges.add((controller, t))
                inner = []
                for child in s.children:
                    if child.kind in ("resources", "block"):
                        inner.extend(child.children)
                visit(inner, t)
                span_ids = _ids_within(inner, num)
                for child in s.children:
                    if child.kind == "catch":
                        h = num.id_of("catch", child)
                        if controller is not None:
                            edges.add((controller, h))
                        for sid in span_ids:
                            edges.add((sid, h))
                        visit([child.children[1]], h)
                    elif child.kind == "finally":
                        f = num.id_of("finally", child)
                        if controller is not None:
                            edges.add((controller, f))
                        visit([child.children[0]], f)
            else:
                if controller is not None:
                    edges.add((controller, num.id_of("simple", s)))

    visit(stmts, None)
    return edges


def _ids_within(stmt_list, num):
    """Every node id created for statements nested (at any depth) in the list."""
    targets = set()

    def mark(s):
        targets.add(id(s))
        for c in s.children:
            mark(c)

    for s in stmt_list:
        mark(s)
    return [i for i, (tag, ast) in enumerate(num.nodes) if id(ast) in targets]


# -- a tiny interpreter for desugaring semantics ----------------------------


class _Break(Exception):
    pass


class _Continue(Exception):
    pass


class Interpreter:
    """Runs integer-only statement lists; records calls as an output trace."""

    def __init__(self, fuel=2000):
        self.env = {}
        self.out = []
        self.fuel = fuel

    def run(self, stmts):
        for s in stmts:
            self.exec(s)
        return self.out, dict(self.env)

    def tick(self):
        self.fuel -= 1
        if self.fuel < 0:
            raise RuntimeError("out of fuel")

    def exec(self, s):
        self.tick()
        k = s.kind
        if k == "block":
            for c in s.children:
                self.exec(c)
        elif k == "var_decl":
            for d in s.children:
                self.env[d.value] = self.eval(d.children[0]) if d.children else 0
        elif k == "expr_stmt":
            self.eval(s.children[0])
        elif k == "if":
            if self.eval(s.children[0]):
                self.exec(s.children[1])
            elif len(s.children) == 3:
                self.exec(s.children[2])
        elif k == "while":
            while self.eval(s.children[0]):
                self.tick()
                try:
                    self.exec(s.children[1])
                except _Break:
                    break
                except _Continue:
                    continue
        elif k == "for":
            init, cond, update, body = s.children
            for c in init.children:
                self.exec(c)
            while cond.kind == "empty" or self.eval(cond):
                self.tick()
                try:
                    self.exec(body)
                except _Break:
                    break
                except _Continue:
                    pass
                for e in update.children:
                    self.eval(e)
        elif k == "do_while":
            body, cond = s.children
            while True:
                self.tick()
                try:
                    self.exec(body)
                except _Break:
                    break
                except _Continue:
                    pass
                if not self.eval(cond):
                    break
        elif k == "switch":
            self._switch(s)
        elif k == "break":
            raise _Break()
        elif k == "continue":
            raise _Continue()
        elif k == "empty":
            pass
        else:
            raise NotImplementedError(k)

    def _switch(self, s):
        selector, *cases = s.children
        value = self.eval(selector)
        start = None
        for i, case in enumerate(cases):
            if any(self.eval(label) == value for label in case.children[0].children):
                start = i
                break
        if start is None:
            for i, case in enumerate(cases):
                if case.value == "default":
                    start = i
        if start is None:
            return
        try:
            for case in cases[start:]:
                self.exec(case.children[1])
        except _Break:
            pass

    def eval(self, e):
        k = e.kind
        if k == "literal":
            if e.value in ("true", "false"):
                return int(e.value == "true")
            return int(e.value)
        if k == "identifier":
            return self.env.get(e.value, 0)
        if k == "paren":
            return self.eval(e.children[0])
        if k == "assignment":
            name = e.children[0].value
            v = self.eval(e.children[1])
            if e.value == "+=":
                v = self.env.get(name, 0) + v
            elif e.value == "-=":
                v = self.env.get(name, 0) - v
            self.env[name] = v
            return v
        if k in ("postfix_expr", "unary_expr") and e.value in ("++", "--"):
            name = e.children[0].value
            old = self.env.get(name, 0)
            new = old + (1 if e.value == "++" else -1)
            self.env[name] = new
            return old if k == "postfix_expr" else new
        if k == "unary_expr":
            v = self.eval(e.children[0])
            return {"!": lambda: int(not v), "-": lambda: -v}[e.value]()
        if k == "binary_expr":
            op = e.value
            if op == "&&":
                return int(bool(self.eval(e.children[0])) and bool(self.eval(e.children[1])))
            if op == "||":
                return int(bool(self.eval(e.children[0])) or bool(self.eval(e.children[1])))
            a, b = self.eval(e.children[0]), self.eval(e.children[1])
            return {
                "+": a + b, "-": a - b, "*": a * b, "%": a % b if b else 0,
                "<": int(a < b), ">": int(a > b), "<=": int(a <= b), ">=": int(a >= b),
                "==": int(a == b), "!=": int(a != b),
            }[op]
        if k == "call":
            args = [self.eval(a) for a in e.children[-1].children]
            self.out.append((e.value, tuple(args)))
            return 0
        raise NotImplementedError(k)
