"""Minimal Java-syntax checker and interpreter for JDK-less environments.

Covers the single-class, static-method subset that function-level generation
benchmarks exercise: int/long/double/boolean/char/String values, arithmetic,
comparisons, boolean logic, ternaries, locals, if/while/for, recursion, a
small Math/Integer/Character/String builtin surface, System.out printing and
assert statements. Diagnostics mirror javac's message shapes so downstream
classification treats both toolchains alike.

Run as a script, never imported by the engine:
    python javakin.py check Problem.java
    python javakin.py run [--ea] Problem.java

Known deviations from real Java: int arithmetic does not wrap at 32 bits and
String == compares values, not references.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

KEYWORDS = {
    "abstract", "assert", "boolean", "break", "case", "catch", "char", "class",
    "continue", "default", "do", "double", "else", "enum", "final", "finally",
    "float", "for", "if", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "return",
    "short", "static", "strictfp", "super", "switch", "synchronized", "this",
    "throw", "throws", "try", "void", "while", "true", "false", "null",
}

MODIFIERS = {
    "public", "private", "protected", "static", "final", "abstract",
    "synchronized", "native", "strictfp",
}

PRIMITIVES = {"int", "long", "double", "boolean", "char", "void", "float", "short"}

OPERATORS = [
    "&&", "||", "==", "!=", "<=", ">=", "++", "--", "+=", "-=", "*=", "/=", "%=",
    "+", "-", "*", "/", "%", "!", "<", ">", "=", ".", ",", ";", "(", ")", "{",
    "}", "[", "]", "?", ":",
]


class SourceError(Exception):
    def __init__(self, line: int, message: str, extra: list[str] | None = None):
        super().__init__(message)
        self.line = line
        self.message = message
        self.extra = extra or []


@dataclass
class Token:
    kind: str  # ident, keyword, int, long, double, string, char, op, eof
    value: str
    line: int


def lex(src: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(src)
    line = 1
    while i < n:
        c = src[i]
        if c == "\n":
            line += 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            continue
        if c == "/" and i + 1 < n and src[i + 1] == "/":
            while i < n and src[i] != "\n":
                i += 1
            continue
        if c == "/" and i + 1 < n and src[i + 1] == "*":
            i += 2
            while i + 1 < n and not (src[i] == "*" and src[i + 1] == "/"):
                if src[i] == "\n":
                    line += 1
                i += 1
            if i + 1 >= n:
                raise SourceError(line, "unclosed comment")
            i += 2
            continue
        if c == '"':
            j = i + 1
            buf = []
            while j < n and src[j] != '"':
                if src[j] == "\n":
                    raise SourceError(line, "unclosed string literal")
                if src[j] == "\\" and j + 1 < n:
                    buf.append(_unescape(src[j + 1], line))
                    j += 2
                else:
                    buf.append(src[j])
                    j += 1
            if j >= n:
                raise SourceError(line, "unclosed string literal")
            tokens.append(Token("string", "".join(buf), line))
            i = j + 1
            continue
        if c == "'":
            j = i + 1
            if j < n and src[j] == "\\" and j + 2 < n and src[j + 2] == "'":
                tokens.append(Token("char", _unescape(src[j + 1], line), line))
                i = j + 3
                continue
            if j + 1 < n and src[j + 1] == "'":
                tokens.append(Token("char", src[j], line))
                i = j + 2
                continue
            raise SourceError(line, "unclosed character literal")
        if c.isdigit() or (c == "." and i + 1 < n and src[i + 1].isdigit()):
            j = i
            is_double = False
            while j < n and (src[j].isdigit() or src[j] == "."):
                if src[j] == ".":
                    if is_double:
                        break
                    is_double = True
                j += 1
            if j < n and src[j] in "eE":
                is_double = True
                j += 1
                if j < n and src[j] in "+-":
                    j += 1
                while j < n and src[j].isdigit():
                    j += 1
            text = src[i:j]
            if j < n and src[j] in "lL" and not is_double:
                tokens.append(Token("long", text, line))
                j += 1
            elif j < n and src[j] in "dDfF":
                tokens.append(Token("double", text, line))
                j += 1
            else:
                tokens.append(Token("double" if is_double else "int", text, line))
            i = j
            continue
        if c.isalpha() or c in "_$":
            j = i
            while j < n and (src[j].isalnum() or src[j] in "_$"):
                j += 1
            word = src[i:j]
            tokens.append(Token("keyword" if word in KEYWORDS else "ident", word, line))
            i = j
            continue
        for op in OPERATORS:
            if src.startswith(op, i):
                tokens.append(Token("op", op, line))
                i += len(op)
                break
        else:
            raise SourceError(line, f"illegal character: '{c}'")
    tokens.append(Token("eof", "", line))
    return tokens


def _unescape(c: str, line: int) -> str:
    table = {"n": "\n", "t": "\t", "r": "\r", "\\": "\\", '"': '"', "'": "'", "0": "\0", "b": "\b", "f": "\f"}
    if c not in table:
        raise SourceError(line, f"illegal escape character '\\{c}'")
    return table[c]


# --- AST ---------------------------------------------------------------------


@dataclass
class Method:
    mods: list[str]
    ret_type: str
    name: str
    params: list[tuple[str, str]]  # (type, name)
    body: list
    line: int


@dataclass
class ClassDecl:
    name: str
    methods: list[Method]
    line: int


# statements
@dataclass
class VarDecl:
    var_type: str
    names: list[tuple[str, object]]  # (name, init expr or None)
    line: int


@dataclass
class Assign:
    name: str
    op: str  # '=', '+=', ...
    value: object
    line: int


@dataclass
class If:
    cond: object
    then: list
    orelse: list | None
    line: int


@dataclass
class While:
    cond: object
    body: list
    line: int


@dataclass
class For:
    init: object
    cond: object
    update: object
    body: list
    line: int


@dataclass
class Return:
    value: object
    line: int


@dataclass
class Assert:
    cond: object
    message: object
    line: int


@dataclass
class ExprStmt:
    expr: object
    line: int


@dataclass
class Break:
    line: int


@dataclass
class Continue:
    line: int


# expressions
@dataclass
class Lit:
    value: object
    type: str
    line: int


@dataclass
class Var:
    name: str
    line: int


@dataclass
class Unary:
    op: str
    operand: object
    line: int


@dataclass
class Binary:
    op: str
    left: object
    right: object
    line: int


@dataclass
class Ternary:
    cond: object
    then: object
    orelse: object
    line: int


@dataclass
class Call:
    receiver: object  # None (own class), str (class/chain), or expression
    name: str
    args: list
    line: int


@dataclass
class IncrDecr:
    name: str
    delta: int
    prefix: bool
    line: int


class Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.value != op:
            raise SourceError(tok.line, f"'{op}' expected")
        return self.next()

    def at_op(self, op: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.value == op

    def at_keyword(self, word: str) -> bool:
        tok = self.peek()
        return tok.kind == "keyword" and tok.value == word

    # -- declarations --

    def parse_unit(self) -> ClassDecl:
        while self.at_keyword("package") or self.at_keyword("import"):
            while not self.at_op(";"):
                if self.peek().kind == "eof":
                    raise SourceError(self.peek().line, "';' expected")
                self.next()
            self.next()
        mods = self._modifiers()
        if not self.at_keyword("class"):
            raise SourceError(self.peek().line, "class, interface, or enum expected")
        self.next()
        name_tok = self.next()
        if name_tok.kind != "ident":
            raise SourceError(name_tok.line, "<identifier> expected")
        cls = ClassDecl(name=name_tok.value, methods=[], line=name_tok.line)
        self.expect_op("{")
        while not self.at_op("}"):
            if self.peek().kind == "eof":
                raise SourceError(self.peek().line, "reached end of file while parsing")
            cls.methods.append(self._method())
        self.next()
        if self.peek().kind != "eof":
            raise SourceError(self.peek().line, "class, interface, or enum expected")
        return cls

    def _modifiers(self) -> list[str]:
        mods = []
        while self.peek().kind == "keyword" and self.peek().value in MODIFIERS:
            mods.append(self.next().value)
        return mods

    def _type(self) -> str:
        tok = self.peek()
        if tok.kind == "keyword" and tok.value in PRIMITIVES:
            base = self.next().value
        elif tok.kind == "ident":
            base = self.next().value
            while self.at_op("."):
                self.next()
                part = self.next()
                if part.kind != "ident":
                    raise SourceError(part.line, "<identifier> expected")
                base = part.value
            if self.at_op("<"):
                depth = 0
                while True:
                    t = self.next()
                    if t.kind == "eof":
                        raise SourceError(t.line, "reached end of file while parsing")
                    if t.kind == "op" and t.value == "<":
                        depth += 1
                    elif t.kind == "op" and t.value == ">":
                        depth -= 1
                        if depth == 0:
                            break
        else:
            raise SourceError(tok.line, "<identifier> expected")
        while self.at_op("["):
            self.next()
            self.expect_op("]")
            base += "[]"
        return base

    def _method(self) -> Method:
        start = self.peek()
        self._modifiers()
        ret = self._type()
        name_tok = self.next()
        if name_tok.kind != "ident":
            raise SourceError(name_tok.line, "<identifier> expected")
        self.expect_op("(")
        params: list[tuple[str, str]] = []
        if not self.at_op(")"):
            while True:
                ptype = self._type()
                pname = self.next()
                if pname.kind != "ident":
                    raise SourceError(pname.line, "<identifier> expected")
                params.append((ptype, pname.value))
                if self.at_op(","):
                    self.next()
                    continue
                break
        self.expect_op(")")
        if self.at_keyword("throws"):
            self.next()
            self._type()
            while self.at_op(","):
                self.next()
                self._type()
        body = self._block()
        return Method(mods=[], ret_type=ret, name=name_tok.value, params=params, body=body, line=start.line)

    # -- statements --

    def _block(self) -> list:
        self.expect_op("{")
        stmts = []
        while not self.at_op("}"):
            if self.peek().kind == "eof":
                raise SourceError(self.peek().line, "reached end of file while parsing")
            stmts.append(self._statement())
        self.next()
        return stmts

    def _statement(self):
        tok = self.peek()
        if self.at_op("{"):
            return self._block()
        if tok.kind == "keyword":
            if tok.value == "if":
                return self._if()
            if tok.value == "while":
                self.next()
                self.expect_op("(")
                cond = self._expression()
                self.expect_op(")")
                return While(cond=cond, body=self._body_or_stmt(), line=tok.line)
            if tok.value == "for":
                return self._for()
            if tok.value == "return":
                self.next()
                value = None if self.at_op(";") else self._expression()
                self.expect_op(";")
                return Return(value=value, line=tok.line)
            if tok.value == "assert":
                self.next()
                cond = self._expression()
                message = None
                if self.at_op(":"):
                    self.next()
                    message = self._expression()
                self.expect_op(";")
                return Assert(cond=cond, message=message, line=tok.line)
            if tok.value == "break":
                self.next()
                self.expect_op(";")
                return Break(line=tok.line)
            if tok.value == "continue":
                self.next()
                self.expect_op(";")
                return Continue(line=tok.line)
            if tok.value in PRIMITIVES:
                stmt = self._var_decl()
                self.expect_op(";")
                return stmt
        if tok.kind == "ident" and self._looks_like_decl():
            stmt = self._var_decl()
            self.expect_op(";")
            return stmt
        stmt = self._simple_statement()
        self.expect_op(";")
        return stmt

    def _body_or_stmt(self) -> list:
        if self.at_op("{"):
            return self._block()
        return [self._statement()]

    def _looks_like_decl(self) -> bool:
        # IDENT IDENT or IDENT[] IDENT starts a declaration
        if self.peek(1).kind == "ident":
            return True
        return (
            self.peek(1).kind == "op"
            and self.peek(1).value == "["
            and self.peek(2).kind == "op"
            and self.peek(2).value == "]"
        )

    def _var_decl(self) -> VarDecl:
        tok = self.peek()
        var_type = self._type()
        names: list[tuple[str, object]] = []
        while True:
            name_tok = self.next()
            if name_tok.kind != "ident":
                raise SourceError(name_tok.line, "<identifier> expected")
            init = None
            if self.at_op("="):
                self.next()
                init = self._expression()
            names.append((name_tok.value, init))
            if self.at_op(","):
                self.next()
                continue
            break
        return VarDecl(var_type=var_type, names=names, line=tok.line)

    def _if(self) -> If:
        tok = self.next()
        self.expect_op("(")
        cond = self._expression()
        self.expect_op(")")
        then = self._body_or_stmt()
        orelse = None
        if self.at_keyword("else"):
            self.next()
            orelse = self._body_or_stmt()
        return If(cond=cond, then=then, orelse=orelse, line=tok.line)

    def _for(self) -> For:
        tok = self.next()
        self.expect_op("(")
        init = None
        if not self.at_op(";"):
            if (self.peek().kind == "keyword" and self.peek().value in PRIMITIVES) or (
                self.peek().kind == "ident" and self._looks_like_decl()
            ):
                init = self._var_decl()
            else:
                init = self._simple_statement()
        self.expect_op(";")
        cond = None if self.at_op(";") else self._expression()
        self.expect_op(";")
        update = None if self.at_op(")") else self._simple_statement()
        self.expect_op(")")
        return For(init=init, cond=cond, update=update, body=self._body_or_stmt(), line=tok.line)

    def _simple_statement(self):
        tok = self.peek()
        if tok.kind == "op" and tok.value in ("++", "--"):
            self.next()
            name_tok = self.next()
            if name_tok.kind != "ident":
                raise SourceError(name_tok.line, "<identifier> expected")
            return ExprStmt(
                expr=IncrDecr(name=name_tok.value, delta=1 if tok.value == "++" else -1, prefix=True, line=tok.line),
                line=tok.line,
            )
        if tok.kind == "ident":
            nxt = self.peek(1)
            if nxt.kind == "op" and nxt.value in ("=", "+=", "-=", "*=", "/=", "%="):
                self.next()
                op = self.next().value
                return Assign(name=tok.value, op=op, value=self._expression(), line=tok.line)
            if nxt.kind == "op" and nxt.value in ("++", "--"):
                self.next()
                self.next()
                return ExprStmt(
                    expr=IncrDecr(name=tok.value, delta=1 if nxt.value == "++" else -1, prefix=False, line=tok.line),
                    line=tok.line,
                )
        return ExprStmt(expr=self._expression(), line=tok.line)

    # -- expressions --

    def _expression(self):
        return self._ternary()

    def _ternary(self):
        cond = self._or()
        if self.at_op("?"):
            tok = self.next()
            then = self._expression()
            self.expect_op(":")
            orelse = self._expression()
            return Ternary(cond=cond, then=then, orelse=orelse, line=tok.line)
        return cond

    def _binary_level(self, ops: tuple[str, ...], next_level):
        left = next_level()
        while self.peek().kind == "op" and self.peek().value in ops:
            tok = self.next()
            right = next_level()
            left = Binary(op=tok.value, left=left, right=right, line=tok.line)
        return left

    def _or(self):
        return self._binary_level(("||",), self._and)

    def _and(self):
        return self._binary_level(("&&",), self._equality)

    def _equality(self):
        return self._binary_level(("==", "!="), self._relational)

    def _relational(self):
        return self._binary_level(("<", "<=", ">", ">="), self._additive)

    def _additive(self):
        return self._binary_level(("+", "-"), self._multiplicative)

    def _multiplicative(self):
        return self._binary_level(("*", "/", "%"), self._unary)

    def _unary(self):
        tok = self.peek()
        if tok.kind == "op" and tok.value in ("!", "-", "+"):
            self.next()
            return Unary(op=tok.value, operand=self._unary(), line=tok.line)
        if tok.kind == "op" and tok.value in ("++", "--"):
            self.next()
            name_tok = self.next()
            if name_tok.kind != "ident":
                raise SourceError(name_tok.line, "<identifier> expected")
            return IncrDecr(name=name_tok.value, delta=1 if tok.value == "++" else -1, prefix=True, line=tok.line)
        return self._postfix()

    def _postfix(self):
        expr = self._primary()
        while True:
            if self.at_op("."):
                self.next()
                member = self.next()
                if member.kind != "ident" and member.kind != "keyword":
                    raise SourceError(member.line, "<identifier> expected")
                if self.at_op("("):
                    args = self._args()
                    expr = Call(receiver=expr, name=member.value, args=args, line=member.line)
                else:
                    # field chain used as a receiver path (System.out, Math.PI)
                    if isinstance(expr, Var):
                        expr = Var(name=f"{expr.name}.{member.value}", line=member.line)
                    else:
                        raise SourceError(member.line, "not a statement")
                continue
            if self.at_op("++") or self.at_op("--"):
                tok = self.next()
                if not isinstance(expr, Var):
                    raise SourceError(tok.line, "unexpected type")
                return IncrDecr(name=expr.name, delta=1 if tok.value == "++" else -1, prefix=False, line=tok.line)
            break
        return expr

    def _args(self) -> list:
        self.expect_op("(")
        args = []
        if not self.at_op(")"):
            while True:
                args.append(self._expression())
                if self.at_op(","):
                    self.next()
                    continue
                break
        self.expect_op(")")
        return args

    def _primary(self):
        tok = self.peek()
        if tok.kind in ("int", "long"):
            self.next()
            return Lit(value=int(tok.value), type="long" if tok.kind == "long" else "int", line=tok.line)
        if tok.kind == "double":
            self.next()
            return Lit(value=float(tok.value), type="double", line=tok.line)
        if tok.kind == "string":
            self.next()
            return Lit(value=tok.value, type="String", line=tok.line)
        if tok.kind == "char":
            self.next()
            return Lit(value=tok.value, type="char", line=tok.line)
        if tok.kind == "keyword" and tok.value in ("true", "false"):
            self.next()
            return Lit(value=tok.value == "true", type="boolean", line=tok.line)
        if tok.kind == "keyword" and tok.value == "null":
            self.next()
            return Lit(value=None, type="null", line=tok.line)
        if tok.kind == "keyword" and tok.value == "new":
            raise SourceError(tok.line, "object creation is not supported in this subset")
        if tok.kind == "op" and tok.value == "(":
            self.next()
            inner = self._expression()
            self.expect_op(")")
            return inner
        if tok.kind == "ident":
            self.next()
            if self.at_op("("):
                args = self._args()
                return Call(receiver=None, name=tok.value, args=args, line=tok.line)
            return Var(name=tok.value, line=tok.line)
        raise SourceError(tok.line, "illegal start of expression")


# --- static checks -------------------------------------------------------------

NUMERIC_RANK = {"char": 0, "int": 1, "long": 2, "double": 3}

BUILTIN_STATICS: dict[tuple[str, str], list[tuple[tuple[str, ...], str]]] = {
    ("Math", "abs"): [(("int",), "int"), (("long",), "long"), (("double",), "double")],
    ("Math", "max"): [(("int", "int"), "int"), (("long", "long"), "long"), (("double", "double"), "double")],
    ("Math", "min"): [(("int", "int"), "int"), (("long", "long"), "long"), (("double", "double"), "double")],
    ("Math", "pow"): [(("double", "double"), "double")],
    ("Math", "sqrt"): [(("double",), "double")],
    ("Math", "floor"): [(("double",), "double")],
    ("Math", "ceil"): [(("double",), "double")],
    ("Integer", "parseInt"): [(("String",), "int")],
    ("Integer", "valueOf"): [(("int",), "int"), (("String",), "int")],
    ("Integer", "toString"): [(("int",), "String")],
    ("Long", "parseLong"): [(("String",), "long")],
    ("Double", "parseDouble"): [(("String",), "double")],
    ("String", "valueOf"): [
        (("int",), "String"), (("long",), "String"), (("double",), "String"),
        (("boolean",), "String"), (("char",), "String"),
    ],
    ("Character", "isDigit"): [(("char",), "boolean")],
    ("Character", "isLetter"): [(("char",), "boolean")],
    ("Character", "toLowerCase"): [(("char",), "char")],
    ("Character", "toUpperCase"): [(("char",), "char")],
    ("System.out", "println"): [(("*",), "void"), ((), "void")],
    ("System.out", "print"): [(("*",), "void")],
}

STRING_METHODS: dict[str, list[tuple[tuple[str, ...], str]]] = {
    "length": [((), "int")],
    "charAt": [(("int",), "char")],
    "substring": [(("int",), "String"), (("int", "int"), "String")],
    "equals": [(("*",), "boolean")],
    "equalsIgnoreCase": [(("String",), "boolean")],
    "contains": [(("String",), "boolean")],
    "indexOf": [(("String",), "int"), (("char",), "int")],
    "isEmpty": [((), "boolean")],
    "toUpperCase": [((), "String")],
    "toLowerCase": [((), "String")],
    "trim": [((), "String")],
    "startsWith": [(("String",), "boolean")],
    "endsWith": [(("String",), "boolean")],
    "replace": [(("String", "String"), "String"), (("char", "char"), "String")],
    "compareTo": [(("String",), "int")],
    "concat": [(("String",), "String")],
    "repeat": [(("int",), "String")],
    "hashCode": [((), "int")],
}

BUILTIN_CLASSES = {"Math", "Integer", "Long", "Double", "Character", "String", "System", "System.out"}


@dataclass
class Diag:
    line: int
    message: str
    extra: list[str] = field(default_factory=list)


class Checker:
    def __init__(self, cls: ClassDecl):
        self.cls = cls
        self.diags: list[Diag] = []
        self.methods: dict[str, Method] = {}

    def run(self) -> list[Diag]:
        for m in self.cls.methods:
            if m.name in self.methods:
                self.diags.append(
                    Diag(m.line, f"method {m.name}({','.join(p[0] for p in m.params)}) is already defined in class {self.cls.name}")
                )
            else:
                self.methods[m.name] = m
        for m in self.methods.values():
            self._check_method(m)
        return self.diags

    def _check_method(self, m: Method) -> None:
        env = dict(m.params[::-1] and {name: ptype for ptype, name in m.params} or {})
        self._check_block(m.body, env.copy(), m)
        if m.ret_type != "void" and not _definitely_returns(m.body):
            last_line = _last_line(m.body) or m.line
            self.diags.append(Diag(last_line, "missing return statement"))

    def _check_block(self, stmts: list, env: dict[str, str], m: Method) -> None:
        for stmt in stmts:
            try:
                self._check_stmt(stmt, env, m)
            except SourceError as exc:
                self.diags.append(Diag(exc.line, exc.message, exc.extra))

    def _check_stmt(self, stmt, env: dict[str, str], m: Method) -> None:
        if isinstance(stmt, list):
            self._check_block(stmt, env.copy(), m)
        elif isinstance(stmt, VarDecl):
            for name, init in stmt.names:
                if name in env:
                    raise SourceError(stmt.line, f"variable {name} is already defined in method {m.name}")
                if init is not None:
                    src = self._type_of(init, env)
                    self._require_assignable(src, stmt.var_type, stmt.line)
                env[name] = stmt.var_type
        elif isinstance(stmt, Assign):
            if stmt.name not in env:
                raise SourceError(stmt.line, "cannot find symbol", _symbol_extra("variable", stmt.name, self.cls.name))
            src = self._type_of(stmt.value, env)
            if stmt.op == "=":
                self._require_assignable(src, env[stmt.name], stmt.line)
            else:
                combined = self._binary_type(stmt.op[0], env[stmt.name], src, stmt.line)
                if stmt.op != "+=" or env[stmt.name] != "String":
                    self._require_assignable(combined, env[stmt.name], stmt.line, allow_narrowing=True)
        elif isinstance(stmt, If):
            self._require_boolean(stmt.cond, env)
            self._check_block(stmt.then, env.copy(), m)
            if stmt.orelse is not None:
                self._check_block(stmt.orelse, env.copy(), m)
        elif isinstance(stmt, While):
            self._require_boolean(stmt.cond, env)
            self._check_block(stmt.body, env.copy(), m)
        elif isinstance(stmt, For):
            inner = env.copy()
            if stmt.init is not None:
                self._check_stmt(stmt.init, inner, m)
            if stmt.cond is not None:
                self._require_boolean(stmt.cond, inner)
            if stmt.update is not None:
                self._check_stmt(stmt.update, inner, m)
            self._check_block(stmt.body, inner.copy(), m)
        elif isinstance(stmt, Return):
            if stmt.value is None:
                if m.ret_type != "void":
                    raise SourceError(stmt.line, "missing return value")
            else:
                src = self._type_of(stmt.value, env)
                if m.ret_type == "void":
                    raise SourceError(stmt.line, "incompatible types: unexpected return value")
                self._require_assignable(src, m.ret_type, stmt.line)
        elif isinstance(stmt, Assert):
            self._require_boolean(stmt.cond, env)
            if stmt.message is not None:
                self._type_of(stmt.message, env)
        elif isinstance(stmt, ExprStmt):
            self._type_of(stmt.expr, env)
        elif isinstance(stmt, (Break, Continue)):
            pass
        else:
            raise SourceError(getattr(stmt, "line", 1), "not a statement")

    def _require_boolean(self, expr, env) -> None:
        t = self._type_of(expr, env)
        if t != "boolean":
            raise SourceError(expr.line, f"incompatible types: {t} cannot be converted to boolean")

    def _require_assignable(self, src: str, dst: str, line: int, allow_narrowing: bool = False) -> None:
        if src == dst or dst == "*":
            return
        if src in NUMERIC_RANK and dst in NUMERIC_RANK:
            if NUMERIC_RANK[src] <= NUMERIC_RANK[dst] or allow_narrowing:
                return
            raise SourceError(line, f"incompatible types: possible lossy conversion from {src} to {dst}")
        raise SourceError(line, f"incompatible types: {src} cannot be converted to {dst}")

    def _binary_type(self, op: str, lt: str, rt: str, line: int) -> str:
        if op == "+" and (lt == "String" or rt == "String"):
            return "String"
        if op in ("+", "-", "*", "/", "%"):
            if lt in NUMERIC_RANK and rt in NUMERIC_RANK:
                rank = max(NUMERIC_RANK[lt], NUMERIC_RANK[rt])
                return {0: "int", 1: "int", 2: "long", 3: "double"}[rank]
            raise SourceError(line, f"bad operand types for binary operator '{op}'")
        if op in ("<", "<=", ">", ">="):
            if lt in NUMERIC_RANK and rt in NUMERIC_RANK:
                return "boolean"
            raise SourceError(line, f"bad operand types for binary operator '{op}'")
        if op in ("==", "!="):
            if (lt in NUMERIC_RANK) == (rt in NUMERIC_RANK):
                return "boolean"
            raise SourceError(line, f"incomparable types: {lt} and {rt}")
        if op in ("&&", "||"):
            if lt == "boolean" and rt == "boolean":
                return "boolean"
            raise SourceError(line, f"bad operand types for binary operator '{op}'")
        raise SourceError(line, f"bad operand types for binary operator '{op}'")

    def _type_of(self, expr, env: dict[str, str]) -> str:
        if isinstance(expr, Lit):
            return expr.type
        if isinstance(expr, Var):
            if expr.name in env:
                return env[expr.name]
            if expr.name in BUILTIN_CLASSES or expr.name == self.cls.name:
                return f"<class {expr.name}>"
            base = expr.name.split(".")[0]
            if base in BUILTIN_CLASSES and expr.name in BUILTIN_CLASSES:
                return f"<class {expr.name}>"
            raise SourceError(expr.line, "cannot find symbol", _symbol_extra("variable", expr.name, self.cls.name))
        if isinstance(expr, Unary):
            t = self._type_of(expr.operand, env)
            if expr.op == "!":
                if t != "boolean":
                    raise SourceError(expr.line, "bad operand type for unary operator '!'")
                return "boolean"
            if t not in NUMERIC_RANK:
                raise SourceError(expr.line, f"bad operand type {t} for unary operator '{expr.op}'")
            return "int" if NUMERIC_RANK[t] <= 1 else t
        if isinstance(expr, Binary):
            lt = self._type_of(expr.left, env)
            rt = self._type_of(expr.right, env)
            return self._binary_type(expr.op, lt, rt, expr.line)
        if isinstance(expr, Ternary):
            self._require_boolean(expr.cond, env)
            lt = self._type_of(expr.then, env)
            rt = self._type_of(expr.orelse, env)
            if lt == rt:
                return lt
            if lt in NUMERIC_RANK and rt in NUMERIC_RANK:
                rank = max(NUMERIC_RANK[lt], NUMERIC_RANK[rt])
                return {0: "char", 1: "int", 2: "long", 3: "double"}[rank]
            raise SourceError(expr.line, f"incomparable types: {lt} and {rt}")
        if isinstance(expr, IncrDecr):
            if expr.name not in env:
                raise SourceError(expr.line, "cannot find symbol", _symbol_extra("variable", expr.name, self.cls.name))
            t = env[expr.name]
            if t not in NUMERIC_RANK:
                raise SourceError(expr.line, f"bad operand type {t} for unary operator '++'")
            return t
        if isinstance(expr, Call):
            return self._type_of_call(expr, env)
        raise SourceError(getattr(expr, "line", 1), "illegal start of expression")

    def _type_of_call(self, call: Call, env: dict[str, str]) -> str:
        arg_types = [self._type_of(a, env) for a in call.args]
        receiver = call.receiver
        if isinstance(receiver, Var):
            if receiver.name in env:
                receiver_type = env[receiver.name]
                if receiver_type == "String":
                    return self._string_method(call, arg_types)
                raise SourceError(call.line, "cannot find symbol", _symbol_extra("method", _descr(call.name, arg_types), self.cls.name))
            if receiver.name == self.cls.name:
                receiver = None
            else:
                key = (receiver.name, call.name)
                if key in BUILTIN_STATICS:
                    return self._match_overloads(call, BUILTIN_STATICS[key], arg_types)
                if receiver.name in BUILTIN_CLASSES:
                    raise SourceError(call.line, "cannot find symbol", _symbol_extra("method", _descr(call.name, arg_types), receiver.name.split(".")[0]))
                raise SourceError(call.line, "cannot find symbol", _symbol_extra("variable", receiver.name, self.cls.name))
        elif receiver is not None:
            receiver_type = self._type_of(receiver, env)
            if receiver_type == "String":
                return self._string_method(call, arg_types)
            raise SourceError(call.line, "cannot find symbol", _symbol_extra("method", _descr(call.name, arg_types), self.cls.name))
        if receiver is None:
            if call.name not in self.methods:
                raise SourceError(call.line, "cannot find symbol", _symbol_extra("method", _descr(call.name, arg_types), self.cls.name))
            m = self.methods[call.name]
            if len(arg_types) != len(m.params):
                raise SourceError(
                    call.line,
                    f"method {call.name} in class {self.cls.name} cannot be applied to given types;",
                    [f"  required: {','.join(p[0] for p in m.params) or 'no arguments'}", f"  found:    {','.join(arg_types) or 'no arguments'}"],
                )
            for got, (want, _) in zip(arg_types, m.params):
                self._require_assignable(got, want, call.line)
            return m.ret_type
        raise SourceError(call.line, "cannot find symbol", _symbol_extra("method", _descr(call.name, arg_types), self.cls.name))

    def _string_method(self, call: Call, arg_types: list[str]) -> str:
        if call.name not in STRING_METHODS:
            raise SourceError(call.line, "cannot find symbol", _symbol_extra("method", _descr(call.name, arg_types), "String"))
        return self._match_overloads(call, STRING_METHODS[call.name], arg_types)

    def _match_overloads(self, call: Call, overloads: list[tuple[tuple[str, ...], str]], arg_types: list[str]) -> str:
        for want, ret in overloads:
            if want == ("*",):
                if len(arg_types) == 1:
                    return ret
                continue
            if len(want) != len(arg_types):
                continue
            if all(_assignable(g, w) for g, w in zip(arg_types, want)):
                return ret
        raise SourceError(call.line, "cannot find symbol", _symbol_extra("method", _descr(call.name, arg_types), self.cls.name))


def _assignable(src: str, dst: str) -> bool:
    if dst == "*" or src == dst:
        return True
    return src in NUMERIC_RANK and dst in NUMERIC_RANK and NUMERIC_RANK[src] <= NUMERIC_RANK[dst]


def _descr(name: str, arg_types: list[str]) -> str:
    return f"{name}({','.join(arg_types)})"


def _symbol_extra(kind: str, descr: str, location: str) -> list[str]:
    return [f"  symbol:   {kind} {descr}", f"  location: class {location}"]


def _definitely_returns(stmts: list) -> bool:
    for stmt in stmts:
        if isinstance(stmt, Return):
            return True
        if isinstance(stmt, list) and _definitely_returns(stmt):
            return True
        if isinstance(stmt, If) and stmt.orelse is not None:
            if _definitely_returns(stmt.then) and _definitely_returns(stmt.orelse):
                return True
        if isinstance(stmt, While) and isinstance(stmt.cond, Lit) and stmt.cond.value is True:
            return True
    return False


def _last_line(stmts: list) -> int | None:
    line = None
    for stmt in stmts:
        if isinstance(stmt, list):
            inner = _last_line(stmt)
            line = inner if inner is not None else line
        else:
            line = getattr(stmt, "line", line)
    return line


# --- interpreter ---------------------------------------------------------------


class _Return(Exception):
    def __init__(self, value):
        self.value = value


class _Break(Exception):
    pass


class _Continue(Exception):
    pass


class JavaError(Exception):
    def __init__(self, kind: str, message: str | None = None):
        super().__init__(message or kind)
        self.kind = kind
        self.detail = message


class Interpreter:
    def __init__(self, cls: ClassDecl, assertions_enabled: bool):
        self.cls = cls
        self.methods = {m.name: m for m in cls.methods}
        self.ea = assertions_enabled

    def run_main(self) -> None:
        main = self.methods.get("main")
        if main is None:
            raise JavaError("NoSuchMethodError", "main")
        self.call(main, [[]])

    def call(self, m: Method, args: list):
        env = {name: self._coerce(val, ptype) for (ptype, name), val in zip(m.params, args)}
        try:
            self._exec_block(m.body, env)
        except _Return as ret:
            return self._coerce(ret.value, m.ret_type)
        return None

    def _coerce(self, value, target_type: str):
        if target_type == "double" and isinstance(value, (int,)) and not isinstance(value, bool):
            return float(value)
        if target_type in ("int", "long") and isinstance(value, str) and len(value) == 1:
            return ord(value)
        return value

    def _exec_block(self, stmts: list, env: dict) -> None:
        for stmt in stmts:
            self._exec(stmt, env)

    def _exec(self, stmt, env: dict) -> None:
        if isinstance(stmt, list):
            self._exec_block(stmt, dict(env) if False else env)
        elif isinstance(stmt, VarDecl):
            for name, init in stmt.names:
                value = self._eval(init, env) if init is not None else _default_value(stmt.var_type)
                env[name] = self._coerce(value, stmt.var_type)
        elif isinstance(stmt, Assign):
            value = self._eval(stmt.value, env)
            if stmt.op == "=":
                env[stmt.name] = value
            else:
                env[stmt.name] = _binary_op(stmt.op[0], env[stmt.name], value, stmt.line)
        elif isinstance(stmt, If):
            if self._eval(stmt.cond, env):
                self._exec_block(stmt.then, env)
            elif stmt.orelse is not None:
                self._exec_block(stmt.orelse, env)
        elif isinstance(stmt, While):
            while self._eval(stmt.cond, env):
                try:
                    self._exec_block(stmt.body, env)
                except _Break:
                    break
                except _Continue:
                    continue
        elif isinstance(stmt, For):
            if stmt.init is not None:
                self._exec(stmt.init, env)
            while stmt.cond is None or self._eval(stmt.cond, env):
                try:
                    self._exec_block(stmt.body, env)
                except _Break:
                    break
                except _Continue:
                    pass
                if stmt.update is not None:
                    self._exec(stmt.update, env)
        elif isinstance(stmt, Return):
            raise _Return(self._eval(stmt.value, env) if stmt.value is not None else None)
        elif isinstance(stmt, Assert):
            if self.ea and not self._eval(stmt.cond, env):
                message = java_str(self._eval(stmt.message, env)) if stmt.message is not None else None
                raise JavaError("AssertionError", message)
        elif isinstance(stmt, ExprStmt):
            self._eval(stmt.expr, env)
        elif isinstance(stmt, Break):
            raise _Break()
        elif isinstance(stmt, Continue):
            raise _Continue()

    def _eval(self, expr, env: dict):
        if isinstance(expr, Lit):
            return expr.value
        if isinstance(expr, Var):
            return env[expr.name]
        if isinstance(expr, Unary):
            v = self._eval(expr.operand, env)
            if expr.op == "!":
                return not v
            if expr.op == "-":
                return -_num(v)
            return _num(v)
        if isinstance(expr, Binary):
            if expr.op == "&&":
                return bool(self._eval(expr.left, env)) and bool(self._eval(expr.right, env))
            if expr.op == "||":
                return bool(self._eval(expr.left, env)) or bool(self._eval(expr.right, env))
            return _binary_op(expr.op, self._eval(expr.left, env), self._eval(expr.right, env), expr.line)
        if isinstance(expr, Ternary):
            return self._eval(expr.then if self._eval(expr.cond, env) else expr.orelse, env)
        if isinstance(expr, IncrDecr):
            old = env[expr.name]
            env[expr.name] = _num(old) + expr.delta
            return env[expr.name] if expr.prefix else old
        if isinstance(expr, Call):
            return self._eval_call(expr, env)
        raise JavaError("InternalError", f"unsupported expression at line {getattr(expr, 'line', '?')}")

    def _eval_call(self, call: Call, env: dict):
        args = [self._eval(a, env) for a in call.args]
        receiver = call.receiver
        if isinstance(receiver, Var) and receiver.name not in env:
            name = receiver.name
            if name == self.cls.name:
                receiver = None
            else:
                return _builtin_static(name, call.name, args, call.line)
        if receiver is None:
            m = self.methods[call.name]
            return self.call(m, args)
        value = self._eval(receiver, env) if not isinstance(receiver, Var) else env[receiver.name]
        if isinstance(value, str):
            return _string_call(value, call.name, args, call.line)
        raise JavaError("InternalError", f"bad receiver at line {call.line}")


def _default_value(t: str):
    return {"int": 0, "long": 0, "double": 0.0, "boolean": False, "char": "\0"}.get(t)


def _num(v):
    if isinstance(v, str) and len(v) == 1:
        return ord(v)
    return v


def java_str(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float) and v == int(v) and abs(v) < 1e16:
        return f"{v:.1f}"
    if v is None:
        return "null"
    return str(v)


def _binary_op(op: str, left, right, line: int):
    if op == "+" and (isinstance(left, str) and len(left) != 1 or isinstance(right, str) and len(right) != 1):
        return java_str(left) + java_str(right)
    if op == "+" and isinstance(left, str) and isinstance(right, str):
        # char + char is numeric in Java; String concat was handled above
        return ord(left) + ord(right)
    if op in ("==", "!="):
        eq = left == right
        return eq if op == "==" else not eq
    l, r = _num(left), _num(right)
    if op == "+":
        return l + r
    if op == "-":
        return l - r
    if op == "*":
        return l * r
    if op == "/":
        if isinstance(l, float) or isinstance(r, float):
            if r == 0:
                return float("inf") if l > 0 else float("-inf") if l < 0 else float("nan")
            return l / r
        if r == 0:
            raise JavaError("ArithmeticException", "/ by zero")
        q = abs(l) // abs(r)
        return q if (l < 0) == (r < 0) else -q
    if op == "%":
        if isinstance(l, float) or isinstance(r, float):
            import math

            return math.fmod(l, r)
        if r == 0:
            raise JavaError("ArithmeticException", "/ by zero")
        q = abs(l) // abs(r)
        q = q if (l < 0) == (r < 0) else -q
        return l - q * r
    if op == "<":
        return l < r
    if op == "<=":
        return l <= r
    if op == ">":
        return l > r
    if op == ">=":
        return l >= r
    raise JavaError("InternalError", f"operator {op} at line {line}")


def _builtin_static(cls_name: str, method: str, args: list, line: int):
    if cls_name == "System.out":
        text = java_str(args[0]) if args else ""
        if method == "println":
            print(text)
        else:
            print(text, end="")
        return None
    if cls_name == "Math":
        import math

        fns = {
            "abs": abs, "max": max, "min": min,
            "pow": lambda a, b: float(a) ** float(b),
            "sqrt": lambda a: math.sqrt(a),
            "floor": lambda a: float(math.floor(a)),
            "ceil": lambda a: float(math.ceil(a)),
        }
        return fns[method](*[_num(a) for a in args])
    if cls_name == "Integer":
        if method == "parseInt":
            try:
                return int(args[0].strip())
            except ValueError:
                raise JavaError("NumberFormatException", f'For input string: "{args[0]}"') from None
        if method == "valueOf":
            return int(args[0]) if not isinstance(args[0], str) or len(args[0]) != 1 else ord(args[0])
        if method == "toString":
            return str(args[0])
    if cls_name == "Long" and method == "parseLong":
        return int(args[0].strip())
    if cls_name == "Double" and method == "parseDouble":
        return float(args[0].strip())
    if cls_name == "Character":
        c = args[0]
        if method == "isDigit":
            return c.isdigit()
        if method == "isLetter":
            return c.isalpha()
        if method == "toLowerCase":
            return c.lower()
        if method == "toUpperCase":
            return c.upper()
    if cls_name == "String" and method == "valueOf":
        return java_str(args[0])
    raise JavaError("InternalError", f"builtin {cls_name}.{method} at line {line}")


def _string_call(value: str, method: str, args: list, line: int):
    try:
        if method == "length":
            return len(value)
        if method == "charAt":
            idx = args[0]
            if idx < 0 or idx >= len(value):
                raise JavaError("StringIndexOutOfBoundsException", f"index {idx}, length {len(value)}")
            return value[idx]
        if method == "substring":
            start = args[0]
            end = args[1] if len(args) > 1 else len(value)
            if start < 0 or end > len(value) or start > end:
                raise JavaError("StringIndexOutOfBoundsException", f"begin {start}, end {end}, length {len(value)}")
            return value[start:end]
        if method == "equals":
            return value == args[0]
        if method == "equalsIgnoreCase":
            return value.lower() == args[0].lower()
        if method == "contains":
            return args[0] in value
        if method == "indexOf":
            return value.find(args[0])
        if method == "isEmpty":
            return len(value) == 0
        if method == "toUpperCase":
            return value.upper()
        if method == "toLowerCase":
            return value.lower()
        if method == "trim":
            return value.strip()
        if method == "startsWith":
            return value.startswith(args[0])
        if method == "endsWith":
            return value.endswith(args[0])
        if method == "replace":
            return value.replace(args[0], args[1])
        if method == "compareTo":
            other = args[0]
            return -1 if value < other else (1 if value > other else 0)
        if method == "concat":
            return value + args[0]
        if method == "repeat":
            return value * args[0]
        if method == "hashCode":
            h = 0
            for ch in value:
                h = (31 * h + ord(ch)) & 0xFFFFFFFF
            return h - 0x100000000 if h >= 0x80000000 else h
    except IndexError:
        raise JavaError("StringIndexOutOfBoundsException", method) from None
    raise JavaError("InternalError", f"String.{method} at line {line}")


# --- entry points ----------------------------------------------------------------


def check_source(src: str) -> list[Diag]:
    try:
        tokens = lex(src)
        cls = Parser(tokens).parse_unit()
    except SourceError as exc:
        return [Diag(exc.line, exc.message, exc.extra)]
    return Checker(cls).run()


def _emit(diags: list[Diag], path: str) -> None:
    for d in diags:
        sys.stderr.write(f"{path}:{d.line}: error: {d.message}\n")
        for line in d.extra:
            sys.stderr.write(line + "\n")
    count = len(diags)
    sys.stderr.write(f"{count} error{'s' if count != 1 else ''}\n")


def main(argv: list[str]) -> int:
    if len(argv) < 2 or argv[0] not in ("check", "run"):
        sys.stderr.write("usage: javakin.py {check|run} [--ea] <file>\n")
        return 2
    mode = argv[0]
    ea = "--ea" in argv[1:]
    path = [a for a in argv[1:] if not a.startswith("--")][0]
    with open(path, encoding="utf-8") as fh:
        src = fh.read()
    diags = check_source(src)
    if diags:
        _emit(diags, path)
        return 1
    if mode == "check":
        return 0
    tokens = lex(src)
    cls = Parser(tokens).parse_unit()
    interp = Interpreter(cls, assertions_enabled=ea)
    try:
        interp.run_main()
    except JavaError as exc:
        if exc.kind == "NoSuchMethodError":
            sys.stderr.write(f"Error: Main method not found in class {cls.name}\n")
        else:
            detail = f": {exc.detail}" if exc.detail else ""
            sys.stderr.write(f'Exception in thread "main" java.lang.{exc.kind}{detail}\n')
        return 1
    except RecursionError:
        sys.stderr.write('Exception in thread "main" java.lang.StackOverflowError\n')
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
