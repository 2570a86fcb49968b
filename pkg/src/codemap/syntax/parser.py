"""Tolerant recursive-descent parser for a shared Java/C# subset.

The subset covers what the downstream token normalizer can exploit:
package/namespace headers, imports, class declarations, fields, methods,
local declarations, calls, literals, if/loops/return and blocks.  Anything
else degrades to an `opaque` node that keeps its identifier and literal
tokens, so no input is rejected for using an unsupported construct.
"""

from __future__ import annotations

from .lexer import ParseError, Tok, lex
from .tree import Node, SyntaxTree

MODIFIERS = {
    # java
    "public", "private", "protected", "static", "final", "abstract",
    "synchronized", "native", "transient", "volatile", "strictfp", "default",
    # csharp
    "internal", "readonly", "const", "sealed", "virtual", "override",
    "async", "partial", "extern", "unsafe", "required",
}

PRIMITIVES = {
    "int", "long", "float", "double", "boolean", "bool", "char", "byte",
    "short", "uint", "ulong", "ushort", "sbyte", "decimal", "void",
    "string", "object", "var",
}

# statement keywords that open a construct we do not model; the opaque
# scanner must swallow their brace blocks and continuation clauses
_OPAQUE_BLOCK_KW = {
    "try", "switch", "synchronized", "lock", "using", "fixed", "checked",
    "unchecked",
}
_OPAQUE_CONTINUATION_KW = {"catch", "finally", "else"}

_TYPE_DECL_KW = {"interface", "enum", "struct", "record", "delegate", "event"}


class Parser:
    def __init__(self, source: str, language: str):
        self.src = source
        self.lang = language
        self.toks: list[Tok] = lex(source)
        self.i = 0

    # token cursor helpers -------------------------------------------------

    def peek(self, k: int = 0) -> Tok | None:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def at(self, text: str, k: int = 0) -> bool:
        t = self.peek(k)
        return t is not None and t.text == text

    def at_name(self, k: int = 0) -> bool:
        t = self.peek(k)
        return t is not None and t.kind == "name"

    def eat(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Tok:
        t = self.peek()
        if t is None:
            last = self.toks[-1] if self.toks else None
            line = last.line if last else 1
            col = last.col if last else 1
            raise ParseError(f"expected {text!r}, found end of input", line, col)
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text!r}", t.line, t.col)
        return self.eat()

    def _end_offset(self) -> int:
        return self.toks[self.i - 1].end if self.i > 0 else 0

    def _skip_balanced(self, open_ch: str, close_ch: str) -> None:
        """Consume from the opening delimiter through its match."""
        self.expect(open_ch)
        depth = 1
        while depth and self.peek() is not None:
            t = self.eat()
            if t.text == open_ch:
                depth += 1
            elif t.text == close_ch:
                depth -= 1

    # compilation unit -----------------------------------------------------

    def parse_unit(self) -> SyntaxTree:
        children: list[Node] = []
        while self.peek() is not None:
            node = self.parse_top_level()
            if node is not None:
                children.append(node)
        root = Node("unit", 0, len(self.src), children, meta={"language": self.lang})
        return SyntaxTree(root, self.lang)

    def parse_top_level(self) -> Node | None:
        self._skip_annotations()
        t = self.peek()
        if t is None:
            return None
        if t.text == "package" and self.lang == "java":
            return self.parse_package()
        if t.text == "import" and self.lang == "java":
            return self.parse_java_import()
        if t.text == "using" and self.lang == "csharp":
            return self.parse_csharp_using()
        if t.text == "namespace" and self.lang == "csharp":
            return self.parse_namespace()
        saved = self.i
        mods = self._collect_modifiers()
        if self.at("class"):
            return self.parse_class(mods, self.toks[saved].start)
        self.i = saved
        # bare statements parse too, so listing-sized fragments round-trip
        return self.parse_statement()

    def parse_package(self) -> Node:
        start = self.peek().start
        self.expect("package")
        name = self._dotted_name()
        if self.at(";"):
            self.eat()
        return Node("package", start, self._end_offset(), meta={"name": name})

    def parse_java_import(self) -> Node:
        start = self.peek().start
        self.expect("import")
        if self.at("static"):
            self.eat()
        segs = [self.eat().text]
        wildcard = False
        while self.at("."):
            self.eat()
            if self.at("*"):
                self.eat()
                wildcard = True
                break
            segs.append(self.eat().text)
        if self.at(";"):
            self.eat()
        meta = {"qualified": ".".join(segs), "wildcard": wildcard}
        if not wildcard:
            meta["simple"] = segs[-1]
        return Node("import", start, self._end_offset(), meta=meta)

    def parse_csharp_using(self) -> Node:
        start = self.peek().start
        self.expect("using")
        if self.at("static"):
            self.eat()
        first = self._dotted_name()
        meta: dict
        if self.at("="):
            self.eat()
            target = self._dotted_name()
            meta = {"qualified": target, "wildcard": False, "simple": first}
        else:
            # plain `using N;` imports a namespace, like a java wildcard
            meta = {"qualified": first, "wildcard": True}
        if self.at(";"):
            self.eat()
        return Node("import", start, self._end_offset(), meta=meta)

    def parse_namespace(self) -> Node:
        start = self.peek().start
        self.expect("namespace")
        name = self._dotted_name()
        children: list[Node] = []
        if self.at(";"):
            # file-scoped namespace: rest of the file belongs to it
            self.eat()
            while self.peek() is not None:
                node = self.parse_top_level()
                if node is not None:
                    children.append(node)
        else:
            self.expect("{")
            while self.peek() is not None and not self.at("}"):
                node = self.parse_top_level()
                if node is not None:
                    children.append(node)
            if self.at("}"):
                self.eat()
        return Node("namespace", start, self._end_offset(), children, meta={"name": name})

    def _dotted_name(self) -> str:
        segs = [self.eat().text]
        while self.at(".") and self.at_name(1):
            self.eat()
            segs.append(self.eat().text)
        return ".".join(segs)

    def _skip_annotations(self) -> None:
        while True:
            if self.lang == "java" and self.at("@") and self.at_name(1):
                self.eat()
                self._dotted_name()
                if self.at("("):
                    self._skip_balanced("(", ")")
                continue
            if self.lang == "csharp" and self.at("["):
                # attribute lists only appear where a member may start
                self._skip_balanced("[", "]")
                continue
            return

    def _collect_modifiers(self) -> list[str]:
        mods = []
        while self.at_name() and self.peek().text in MODIFIERS:
            # `new` expressions never occur in modifier position; C# `new`
            # as a hiding modifier is rare enough to omit from the set
            mods.append(self.eat().text)
        return mods

    # class bodies ---------------------------------------------------------

    def parse_class(self, mods: list[str], start: int | None = None) -> Node:
        if start is None:
            start = self.peek().start
        self.expect("class")
        name = self.eat().text
        self._skip_generic_args()
        while self.peek() is not None and not self.at("{"):
            self.eat()  # extends/implements/base list, where clauses
        self.expect("{")
        members: list[Node] = []
        while self.peek() is not None and not self.at("}"):
            member = self.parse_member(name)
            if member is not None:
                members.append(member)
        if self.at("}"):
            self.eat()
        return Node("class", start, self._end_offset(), members,
                    meta={"name": name, "modifiers": mods})

    def parse_member(self, class_name: str) -> Node | None:
        self._skip_annotations()
        if self.peek() is None or self.at("}"):
            return None
        if self.at(";"):
            self.eat()
            return None
        entry = self.i
        mods = self._collect_modifiers()
        start = self.toks[entry].start
        if self.at("class"):
            return self.parse_class(mods, start)
        if self.at_name() and self.peek().text in _TYPE_DECL_KW:
            self.i = entry
            return self.parse_opaque_member()
        if self.at("{"):
            self.i = entry
            return self.parse_opaque_member()
        # constructor: class name followed directly by an argument list
        if self.at(class_name) and self.at("(", 1):
            return self.parse_method(mods, None, self.eat().text, start)
        saved = self.i
        type_name = self._try_type()
        if type_name is not None and self.at_name():
            name = self.eat().text
            self._skip_generic_args()
            if self.at("("):
                return self.parse_method(mods, type_name, name, start)
            if self.lang == "csharp" and self.at("{"):
                # property accessor block
                self.i = entry
                return self.parse_opaque_member()
            if self.at("=") or self.at(",") or self.at(";") or self.at("["):
                self.i -= 1  # re-read the declarator name
                return self.parse_field(mods, type_name, start)
        self.i = entry
        return self.parse_opaque_member()

    def parse_field(self, mods: list[str], type_name: str, start: int) -> Node:
        decls: list[Node] = []
        while True:
            d_start = self.peek().start
            name = self.eat().text
            dims = ""
            while self.at("["):
                self._skip_balanced("[", "]")
                dims += "[]"
            init: list[Node] = []
            if self.at("="):
                self.eat()
                init = self.parse_expr_atoms({",", ";"})
            decls.append(Node("decl", d_start, self._end_offset(), init,
                              meta={"name": name, "type": type_name + dims,
                                    "modifiers": mods}))
            if self.at(","):
                self.eat()
                continue
            break
        if self.at(";"):
            self.eat()
        return Node("decl_stmt", start, self._end_offset(), decls,
                    meta={"type": type_name, "modifiers": mods})

    def parse_method(self, mods: list[str], return_type: str | None,
                     name: str, start: int | None = None) -> Node:
        if start is None:
            start = self.toks[self.i - 1].start
        self.expect("(")
        params: list[tuple[str, str]] = []
        while self.peek() is not None and not self.at(")"):
            self._skip_annotations()
            while self.at_name() and self.peek().text in (
                    "final", "ref", "out", "in", "params", "this"):
                self.eat()
            p_type = self._try_type()
            if p_type is None:
                self.eat()
                continue
            if self.at(".") and self.at(".", 1):  # varargs `...`
                while self.at("."):
                    self.eat()
                p_type += "[]"
            if self.at_name():
                p_name = self.eat().text
                while self.at("["):
                    self._skip_balanced("[", "]")
                    p_type += "[]"
                if self.at("="):  # default value
                    self.eat()
                    self.parse_expr_atoms({",", ")"})
                params.append((p_type, p_name))
            if self.at(","):
                self.eat()
        if self.at(")"):
            self.eat()
        # throws clause / base-ctor call / where clauses
        while self.peek() is not None and not (
                self.at("{") or self.at(";") or self.at("=>")):
            if self.at("("):
                self._skip_balanced("(", ")")
            else:
                self.eat()
        body: list[Node] = []
        if self.at("{"):
            block = self.parse_block()
            body = [block]
        elif self.at("=>"):
            self.eat()
            e_start = self.peek().start if self.peek() else self._end_offset()
            atoms = self.parse_expr_atoms({";"})
            if self.at(";"):
                self.eat()
            expr = Node("expr", e_start, self._end_offset(), atoms)
            body = [Node("return_stmt", e_start, self._end_offset(), [expr])]
        elif self.at(";"):
            self.eat()
        return Node("func_decl", start, self._end_offset(), body,
                    meta={"name": name, "modifiers": mods,
                          "return_type": return_type, "params": params})

    def parse_opaque_member(self) -> Node:
        """Swallow one unsupported construct, keeping name/literal leaves."""
        start = self.peek().start
        entry = self.i
        leaves: list[Node] = []
        depth = 0
        saw_brace = False
        while self.peek() is not None:
            t = self.peek()
            if depth == 0 and saw_brace and t.text not in _OPAQUE_CONTINUATION_KW:
                break
            if depth == 0 and t.text == ";":
                self.eat()
                break
            if depth == 0 and t.text == "}" and not saw_brace:
                break  # do not eat the enclosing class brace
            t = self.eat()
            if t.text in "{([":
                depth += 1
                if t.text == "{":
                    saw_brace = True
            elif t.text in "})]":
                depth -= 1
            elif t.kind == "name":
                leaves.append(Node("name", t.start, t.end, text=t.text))
            elif t.kind in ("str", "num", "char"):
                leaves.append(_literal_node(t))
        if self.i == entry:  # never stall on a stray closing brace
            self.eat()
        return Node("opaque", start, self._end_offset(), leaves)

    # statements -----------------------------------------------------------

    def parse_block(self) -> Node:
        start = self.peek().start
        self.expect("{")
        stmts: list[Node] = []
        while self.peek() is not None and not self.at("}"):
            s = self.parse_statement()
            if s is not None:
                stmts.append(s)
        if self.at("}"):
            self.eat()
        return Node("block", start, self._end_offset(), stmts)

    def parse_statement(self) -> Node | None:
        self._skip_annotations()
        t = self.peek()
        if t is None:
            return None
        if t.text == ";":
            self.eat()
            return None
        if t.text == "{":
            return self.parse_block()
        if t.text == "if":
            return self.parse_if()
        if t.text == "while":
            return self.parse_while()
        if t.text == "do":
            return self.parse_do_while()
        if t.text == "for":
            return self.parse_for()
        if t.text == "foreach":
            return self.parse_foreach()
        if t.text == "return":
            return self.parse_return()
        if t.kind == "name" and t.text in _OPAQUE_BLOCK_KW:
            # `using (...)` as a statement, try/switch/lock blocks, ...
            return self.parse_opaque_member()
        if t.kind == "name" and t.text in (
                "break", "continue", "throw", "goto", "yield"):
            return self.parse_opaque_member()
        decl = self._try_local_decl()
        if decl is not None:
            return decl
        start = t.start
        atoms = self.parse_expr_atoms({";"})
        if self.at(";"):
            self.eat()
        if not atoms:
            return None
        expr = Node("expr", start, self._end_offset(), atoms)
        return Node("expr_stmt", start, self._end_offset(), [expr])

    def parse_if(self) -> Node:
        start = self.peek().start
        self.expect("if")
        self.expect("(")
        c_start = self.peek().start if self.peek() else start
        atoms = self.parse_expr_atoms({")"})
        self.expect(")")
        cond = Node("expr", c_start, self._end_offset(), atoms)
        children = [cond]
        then = self.parse_statement()
        if then is not None:
            children.append(then)
        if self.at("else"):
            self.eat()
            other = self.parse_statement()
            if other is not None:
                children.append(other)
        return Node("if_stmt", start, self._end_offset(), children)

    def parse_while(self) -> Node:
        start = self.peek().start
        self.expect("while")
        self.expect("(")
        c_start = self.peek().start if self.peek() else start
        atoms = self.parse_expr_atoms({")"})
        self.expect(")")
        cond = Node("expr", c_start, self._end_offset(), atoms)
        children = [cond]
        body = self.parse_statement()
        if body is not None:
            children.append(body)
        return Node("loop", start, self._end_offset(), children)

    def parse_do_while(self) -> Node:
        start = self.peek().start
        self.expect("do")
        children = []
        body = self.parse_statement()
        if body is not None:
            children.append(body)
        self.expect("while")
        self.expect("(")
        c_start = self.peek().start if self.peek() else start
        atoms = self.parse_expr_atoms({")"})
        self.expect(")")
        if self.at(";"):
            self.eat()
        children.append(Node("expr", c_start, self._end_offset(), atoms))
        return Node("loop", start, self._end_offset(), children)

    def parse_for(self) -> Node:
        start = self.peek().start
        self.expect("for")
        self.expect("(")
        children: list[Node] = []
        # java enhanced for: `for (Type name : iterable)`
        saved = self.i
        enhanced = None
        p_type = self._try_type()
        if p_type is not None and self.at_name() and self.at(":", 1):
            d_start = self.toks[saved].start
            name = self.eat().text
            decl = Node("decl", d_start, self._end_offset(), [],
                        meta={"name": name, "type": p_type, "modifiers": []})
            stmt = Node("decl_stmt", d_start, self._end_offset(), [decl],
                        meta={"type": p_type, "modifiers": []})
            self.expect(":")
            e_start = self.peek().start if self.peek() else d_start
            atoms = self.parse_expr_atoms({")"})
            it = Node("expr", e_start, self._end_offset(), atoms)
            enhanced = [stmt, it]
        else:
            self.i = saved
        if enhanced is not None:
            children.extend(enhanced)
        else:
            if not self.at(";"):
                init = self._try_local_decl(terminator=";")
                if init is None:
                    i_start = self.peek().start
                    atoms = self.parse_expr_atoms({";"})
                    init = Node("expr", i_start, self._end_offset(), atoms)
                children.append(init)
            if self.at(";"):
                self.eat()
            if not self.at(";"):
                c_start = self.peek().start
                atoms = self.parse_expr_atoms({";"})
                children.append(Node("expr", c_start, self._end_offset(), atoms))
            if self.at(";"):
                self.eat()
            if not self.at(")"):
                u_start = self.peek().start
                atoms = self.parse_expr_atoms({")"})
                children.append(Node("expr", u_start, self._end_offset(), atoms))
        self.expect(")")
        body = self.parse_statement()
        if body is not None:
            children.append(body)
        return Node("loop", start, self._end_offset(), children)

    def parse_foreach(self) -> Node:
        start = self.peek().start
        self.expect("foreach")
        self.expect("(")
        d_start = self.peek().start if self.peek() else start
        p_type = self._try_type() or "?"
        name = self.eat().text if self.at_name() else "?"
        decl = Node("decl", d_start, self._end_offset(), [],
                    meta={"name": name, "type": p_type, "modifiers": []})
        stmt = Node("decl_stmt", d_start, self._end_offset(), [decl],
                    meta={"type": p_type, "modifiers": []})
        if self.at("in"):
            self.eat()
        e_start = self.peek().start if self.peek() else d_start
        atoms = self.parse_expr_atoms({")"})
        self.expect(")")
        it = Node("expr", e_start, self._end_offset(), atoms)
        children = [stmt, it]
        body = self.parse_statement()
        if body is not None:
            children.append(body)
        return Node("loop", start, self._end_offset(), children)

    def parse_return(self) -> Node:
        start = self.peek().start
        self.expect("return")
        children = []
        if not self.at(";"):
            e_start = self.peek().start if self.peek() else start
            atoms = self.parse_expr_atoms({";"})
            if atoms:
                children.append(Node("expr", e_start, self._end_offset(), atoms))
        if self.at(";"):
            self.eat()
        return Node("return_stmt", start, self._end_offset(), children)

    def _try_local_decl(self, terminator: str = ";") -> Node | None:
        saved = self.i
        mods = self._collect_modifiers()
        type_name = self._try_type()
        if type_name is None or not self.at_name():
            self.i = saved
            return None
        nxt = self.peek(1)
        if nxt is None or nxt.text not in ("=", ",", ";", "[", ":"):
            self.i = saved
            return None
        if nxt.text == ":":  # enhanced-for declarator, not a local
            self.i = saved
            return None
        start = self.toks[saved].start
        decls: list[Node] = []
        while True:
            d_start = self.peek().start
            name = self.eat().text
            dims = ""
            while self.at("["):
                self._skip_balanced("[", "]")
                dims += "[]"
            init: list[Node] = []
            if self.at("="):
                self.eat()
                init = self.parse_expr_atoms({",", terminator})
            decls.append(Node("decl", d_start, self._end_offset(), init,
                              meta={"name": name, "type": type_name + dims,
                                    "modifiers": mods}))
            if self.at(","):
                self.eat()
                continue
            break
        if self.at(terminator) and terminator == ";":
            self.eat()
        return Node("decl_stmt", start, self._end_offset(), decls,
                    meta={"type": type_name, "modifiers": mods})

    # types ----------------------------------------------------------------

    def _try_type(self) -> str | None:
        """Parse a type reference; generic arguments are erased."""
        if not self.at_name():
            return None
        saved = self.i
        first = self.eat().text
        if first in MODIFIERS or first in ("new", "return", "if", "while",
                                           "for", "foreach", "do", "else"):
            self.i = saved
            return None
        segs = [first]
        if first not in PRIMITIVES:
            while self.at(".") and self.at_name(1):
                self.eat()
                segs.append(self.eat().text)
        if not self._skip_generic_args():
            self.i = saved
            return None
        dims = ""
        while self.at("[") and self.at("]", 1):
            self.eat()
            self.eat()
            dims += "[]"
        if self.at("?"):  # csharp nullable annotation
            nxt = self.peek(1)
            if nxt is not None and (nxt.kind == "name" or nxt.text in (")", ",", ">")):
                self.eat()
        return ".".join(segs) + dims

    def _skip_generic_args(self) -> bool:
        """Skip a balanced `<...>` if present; False means unbalanced."""
        if not self.at("<"):
            return True
        saved = self.i
        depth = 0
        while self.peek() is not None:
            t = self.peek()
            if t.text == "<":
                depth += 1
            elif t.text == ">":
                depth -= 1
                if depth == 0:
                    self.eat()
                    return True
            elif t.text in (";", "{", "}", ")") or t.kind in ("str", "char"):
                break  # comparison chain, not generics
            self.eat()
        self.i = saved
        return False

    # expressions ----------------------------------------------------------

    def parse_expr_atoms(self, stop: set[str]) -> list[Node]:
        """Flatten one expression into call/literal/name atoms.

        Operators carry no enriched token and are dropped here; grouping
        parens, index brackets and initializer braces recurse so the stop
        set only applies at the top nesting level.
        """
        atoms: list[Node] = []
        while True:
            t = self.peek()
            if t is None or t.text in stop:
                break
            if t.kind in ("str", "num", "char"):
                self.eat()
                atoms.append(_literal_node(t))
                continue
            if t.kind == "name":
                if t.text in ("true", "false"):
                    self.eat()
                    atoms.append(Node("literal", t.start, t.end,
                                      text=t.text, meta={"kind": "boolean"}))
                    continue
                if t.text == "null":
                    self.eat()
                    atoms.append(Node("literal", t.start, t.end,
                                      text=t.text, meta={"kind": "null"}))
                    continue
                if t.text == "new":
                    atoms.extend(self._parse_new())
                    continue
                atoms.extend(self._parse_name_atom())
                continue
            if t.text == "(":
                self.eat()
                atoms.extend(self.parse_expr_atoms({")"}))
                if self.at(")"):
                    self.eat()
                continue
            if t.text == "[":
                self.eat()
                atoms.extend(self.parse_expr_atoms({"]"}))
                if self.at("]"):
                    self.eat()
                continue
            if t.text == "{":
                self.eat()
                atoms.extend(self.parse_expr_atoms({"}"}))
                if self.at("}"):
                    self.eat()
                continue
            self.eat()  # operator or separator: no token survives
        return atoms

    def _parse_name_atom(self) -> list[Node]:
        start_tok = self.peek()
        segs = [self.eat().text]
        while self.at(".") and self.at_name(1):
            self.eat()
            segs.append(self.eat().text)
        if self.at("("):
            call = self._parse_call(segs, start_tok.start, new=False)
            atoms = [call]
            # chained member calls have an unknowable owner type
            while self.at(".") and self.at_name(1) and self.at("(", 2):
                self.eat()
                m_start = self.peek().start
                member = [self.eat().text]
                chained = self._parse_call(member, m_start, new=False,
                                           owner_unknown=True)
                atoms.append(chained)
            return atoms
        return [Node("nameref", start_tok.start, self._end_offset(),
                     meta={"segs": segs})]

    def _parse_new(self) -> list[Node]:
        start = self.peek().start
        self.expect("new")
        type_name = self._try_type()
        if type_name is None:
            return []
        base = type_name.replace("[]", "")
        if self.at("("):
            call = self._parse_call(base.split("."), start, new=True)
            atoms = [call]
            while self.at(".") and self.at_name(1) and self.at("(", 2):
                self.eat()
                m_start = self.peek().start
                member = [self.eat().text]
                atoms.append(self._parse_call(member, m_start, new=False,
                                              owner_unknown=True))
            if self.at("{"):  # object/collection initializer
                self.eat()
                atoms.extend(self.parse_expr_atoms({"}"}))
                if self.at("}"):
                    self.eat()
            return atoms
        atoms: list[Node] = [Node("nameref", start, self._end_offset(),
                                  meta={"segs": base.split("."), "is_type": True})]
        while self.at("["):
            self.eat()
            atoms.extend(self.parse_expr_atoms({"]"}))
            if self.at("]"):
                self.eat()
        if self.at("{"):
            self.eat()
            atoms.extend(self.parse_expr_atoms({"}"}))
            if self.at("}"):
                self.eat()
        return atoms

    def _parse_call(self, segs: list[str], start: int, new: bool,
                    owner_unknown: bool = False) -> Node:
        self.expect("(")
        args: list[Node] = []
        while self.peek() is not None and not self.at(")"):
            a_start = self.peek().start
            atoms = self.parse_expr_atoms({",", ")"})
            if atoms:
                args.append(Node("argument", a_start, self._end_offset(), atoms))
            if self.at(","):
                self.eat()
        if self.at(")"):
            self.eat()
        return Node("func_call", start, self._end_offset(), args,
                    meta={"segs": segs, "new": new,
                          "owner_unknown": owner_unknown})


def _literal_node(t: Tok) -> Node:
    if t.kind == "str":
        kind = "string"
    elif t.kind == "char":
        kind = "char"
    else:
        kind = "number"
    return Node("literal", t.start, t.end, text=t.text, meta={"kind": kind})


def parse(source: str, language: str) -> SyntaxTree:
    """Parse one source file; unsupported constructs become opaque nodes."""
    if language not in ("java", "csharp"):
        raise ValueError(f"unsupported language: {language}")
    return Parser(source, language).parse_unit()
