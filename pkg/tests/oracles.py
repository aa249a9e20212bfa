"""Independent oracles and generators shared by the test modules."""

import ast
import operator
import random

from apievolve.jsrc import parse
from apievolve.jsrc import nodes as n

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul}


def fold(text: str) -> int:
    """Constant-fold an integer expression of literals, + - * and parentheses."""
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        raise ValueError(f"not a constant expression: {text}")
    return ev(ast.parse(text, mode="eval"))


def make_chain(rnd: random.Random, depth: int, k: int, arithmetic: bool = False):
    """A class whose ``sink(...)`` call reads the end of a constant chain.

    Links are spread over fields and locals, and some locals are declared
    with a decoy value and reassigned. Returns the source, the assignments
    in execution order and the name read by ``sink``.
    """
    names = [f"v{i}" for i in range(depth + 1)]
    fields, body, trace = [], [], []
    split = rnd.randint(0, depth + 1)  # the first ``split`` links are fields
    for i, name in enumerate(names):
        if i == 0:
            expr = str(k)
        elif arithmetic:
            expr = f"{names[i - 1]} {rnd.choice('+-*')} {rnd.randint(1, 9)}"
        else:
            expr = names[i - 1]
        if i < split:
            fields.append(f"    private int {name} = {expr};")
        elif rnd.random() < 0.3:
            decoy = rnd.randint(100, 200)
            body.append(f"        int {name} = {decoy};")
            body.append(f"        {name} = {expr};")
            trace.append((name, str(decoy)))
        else:
            body.append(f"        int {name} = {expr};")
        trace.append((name, expr))
    src = "class Chain {\n" + "\n".join(fields) + "\n    void use() {\n" + "\n".join(body)
    src += f"\n        sink({names[-1]});\n    }}\n}}\n"
    return src, trace, names[-1]


def run_chain(trace, target) -> int:
    """Replay the assignments in order with Python integers."""
    env = {}
    for name, expr in trace:
        env[name] = eval(compile(expr, "<chain>", "eval"), {"__builtins__": {}}, dict(env))
    return env[target]


# -- invocation sites ---------------------------------------------------------

_RECEIVERS = ["tp", "this.picker", "views.timePicker", "mPicker"]
_ARGS = ["hour", "12", "Calendar.HOUR", "this.lastHour", "cfg.start", "h + 1", "\"x\"", "minutes * 60"]


def make_site(rnd: random.Random):
    """A method with one pure-argument ``format`` call site in a random statement form."""
    recv = rnd.choice(_RECEIVERS)
    args = ", ".join(rnd.choice(_ARGS) for _ in range(rnd.randint(0, 3)))
    call = f"{recv}.format({args})"
    form = rnd.choice(["expr", "assign", "decl", "return", "nested"])
    stmt = {
        "expr": f"{call};",
        "assign": f"label = {call};",
        "decl": f"String text = {call};",
        "return": f"return {call};",
        "nested": f"show({call}, 1);",
    }[form]
    before = rnd.choice(["", "int h = 3;\n        ", "log(\"start\");\n        "])
    after = "" if form == "return" else rnd.choice(["", "\n        done();"])
    src = ("class Site {\n    private String label;\n\n"
           f"    String run(Picker tp, int hour, int minutes) {{\n        {before}{stmt}{after}\n"
           + ("" if form == "return" else "        return label;\n")
           + "    }\n}\n")
    return src, args.count(",") + 1 if args else 0


# -- tracing interpreter -------------------------------------------------------

LEVELS = {"LOLLIPOP": 21, "M": 23, "N": 24, "O": 26, "P": 28, "Q": 29}


class Tracer:
    """Executes one method body, logging every call in evaluation order.

    Values are symbolic: a call returns a fresh token, names read the
    environment (unknown names evaluate to themselves). Conditions that
    test ``SDK_INT`` use the given SDK level; any other condition is true.
    """

    def __init__(self, text: str, sdk: int):
        self.text = text
        self.sdk = sdk
        self.log: list[str] = []
        self.env: dict[str, object] = {}
        self.calls = 0

    def run(self, method_name: str) -> list[str]:
        unit = parse(self.text)
        method = next(x for x in unit.root.walk() if isinstance(x, n.MethodDecl) and x.name == method_name)
        self.exec(method.body)
        return self.log

    def exec(self, stmt):
        if isinstance(stmt, n.Block):
            for s in stmt.stmts:
                if self.exec(s) == "return":
                    return "return"
        elif isinstance(stmt, n.LocalVarDecl):
            for d in stmt.declarators:
                self.env[d.name] = self.eval(d.init) if d.init is not None else None
        elif isinstance(stmt, n.ExprStmt):
            self.eval(stmt.expr)
        elif isinstance(stmt, n.ReturnStmt):
            self.log.append(f"return {self.eval(stmt.expr) if stmt.expr else ''}")
            return "return"
        elif isinstance(stmt, n.IfStmt):
            branch = stmt.then if self.cond(stmt.cond) else stmt.else_
            if branch is not None:
                return self.exec(branch)
        else:
            raise ValueError(f"tracer cannot run {stmt.kind}")
        return None

    def cond(self, expr) -> bool:
        src = self.text[expr.start:expr.end]
        if "SDK_INT" not in src:
            return True
        level_text = self.text[expr.right.start:expr.right.end].rsplit(".", 1)[-1]
        level = LEVELS[level_text] if level_text in LEVELS else int(level_text)
        return self.sdk >= level

    def eval(self, expr):
        if isinstance(expr, n.Literal):
            return expr.value
        if isinstance(expr, n.NameExpr):
            return self.env.get(expr.name, expr.name)
        if isinstance(expr, n.FieldAccess):
            return f"{self.eval(expr.scope)}.{expr.name}"
        if isinstance(expr, n.BinaryExpr):
            return f"({self.eval(expr.left)} {expr.op} {self.eval(expr.right)})"
        if isinstance(expr, n.AssignExpr):
            value = self.eval(expr.value)
            if isinstance(expr.target, n.NameExpr):
                self.env[expr.target.name] = value
            else:
                self.log.append(f"store {self.text[expr.target.start:expr.target.end]} = {value}")
            return value
        if isinstance(expr, (n.MethodInvocation, n.ObjectCreation)):
            recv = None
            if isinstance(expr, n.MethodInvocation) and expr.receiver is not None:
                recv = self.eval(expr.receiver)
            args = [self.eval(a) for a in expr.args]
            name = expr.name if isinstance(expr, n.MethodInvocation) else f"new {expr.type}"
            self.calls += 1
            self.log.append(f"{recv}.{name}({', '.join(map(str, args))})" if recv else f"{name}({', '.join(map(str, args))})")
            return f"<{name}#{self.calls}>"
        raise ValueError(f"tracer cannot evaluate {expr.kind}")


def trace(text: str, method: str, sdk: int) -> list[str]:
    return Tracer(text, sdk).run(method)
