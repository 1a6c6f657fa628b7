#!/usr/bin/env python3
"""End-to-end checks of the topograph CLI: golden outputs, exit codes,
byte stability, and JSON schema conformance."""
import json
import subprocess
import sys

CLI, DATA, SCHEMA_PATH = sys.argv[1], sys.argv[2], sys.argv[3]
failures = []


def run(args, stdin=""):
    return subprocess.run([CLI] + args, input=stdin, capture_output=True, text=True)


def data(name):
    with open(f"{DATA}/{name}") as f:
        return f.read()


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f"  [{detail}]" if detail and not cond else ""))
    if not cond:
        failures.append(name)


# ---- a small JSON-schema subset validator (type/const/enum/required/
# properties/additionalProperties/items/oneOf/$ref into #/definitions) ----
with open(SCHEMA_PATH) as f:
    SCHEMA = json.load(f)


def resolve(node):
    if "$ref" in node:
        ref = node["$ref"]
        assert ref.startswith("#/definitions/")
        return SCHEMA["definitions"][ref.split("/")[-1]]
    return node


def valid(value, node):
    node = resolve(node)
    if "const" in node and value != node["const"]:
        return False
    if "enum" in node and value not in node["enum"]:
        return False
    t = node.get("type")
    if t == "object":
        if not isinstance(value, dict):
            return False
        for key in node.get("required", []):
            if key not in value:
                return False
        props = node.get("properties", {})
        extra = node.get("additionalProperties")
        for key, sub in value.items():
            if key in props:
                if not valid(sub, props[key]):
                    return False
            elif isinstance(extra, dict):
                if not valid(sub, extra):
                    return False
    elif t == "array":
        if not isinstance(value, list):
            return False
        items = node.get("items")
        if items and not all(valid(x, items) for x in value):
            return False
    elif t == "string":
        if not isinstance(value, str):
            return False
    elif t == "integer":
        if not isinstance(value, int) or isinstance(value, bool):
            return False
    elif t == "boolean":
        if not isinstance(value, bool):
            return False
    if "oneOf" in node:
        if sum(1 for alt in node["oneOf"] if valid(value, alt)) != 1:
            return False
    return True


# ---- golden outputs ----
r = run(["ktheory"], data("ex71.graph"))
check("ktheory ex71", r.returncode == 0 and r.stdout == "K0 = Z, K1 = 0\n", r.stdout)

r = run(["unital"], data("ex72.graph"))
check("unital ex72", r.returncode == 0 and
      r.stdout == "non-unital (∞ singular: E1∖dom(r) infinite)\n", r.stdout)

r = run(["unital"], data("final.graph"))
check("unital final", "ranges escape to infinity" in r.stdout, r.stdout)

r = run(["unital"], data("ex71.graph"))
check("unital ex71", r.stdout == "unital (∞ regular in the completion)\n", r.stdout)

r = run(["classify"], data("ex71.graph"))
check("classify ex71", r.stdout == "v: SingularSource (receives 0)\nw: Regular (receives 1)\n",
      r.stdout)

dual_out = run(["dual"], data("loop.graph"))
r = run(["iso", f"{DATA}/loop.graph", "-"], dual_out.stdout)
check("dual | iso pipe", r.returncode == 0 and r.stdout == "isomorphic\n", r.stdout)

r = run(["iso", f"{DATA}/loop.graph", f"{DATA}/uw.graph"])
check("iso negative", r.returncode == 0 and r.stdout == "not isomorphic\n", r.stdout)

r = run(["paths", "--max-len", "2"], data("loop.graph"))
check("paths loop", r.stdout == "v\ne\ne,e\n", r.stdout)

r = run(["boundary"], data("uw.graph"))
check("boundary uw", r.stdout == "u\ne\n", r.stdout)

r = run(["boundary"], data("loop.graph"))
check("boundary loop", r.stdout == "|(e)^ω\n", r.stdout)

r = run(["orbit", "u", "--bound", "2"], data("uw.graph"))
check("orbit u", r.stdout == "u\ne\n", r.stdout)

r = run(["isotropy", "|(e)^ω"], data("loop.graph"))
check("isotropy loop", r.stdout == "Z\n", r.stdout)

r = run(["ktheory", "--toeplitz"], data("loop.graph"))
check("ktheory toeplitz", r.stdout == "K0 = Z, K1 = 0\n", r.stdout)

r = run(["ktheory", "--relative", "v"], data("loop.graph"))
check("ktheory relative", r.stdout == "K0 = Z, K1 = Z\n", r.stdout)

# A declared relative set steers the dual.
rel_loop = data("loop.graph") + "relative\n"
r = run(["dual"], rel_loop)
check("relative dual via declaration",
      "vertex (v,∞)" in r.stdout and "edge (e,∞)" in r.stdout, r.stdout)

# ---- exit codes ----
check("parse error is exit 2", run(["classify"], "vertex\n").returncode == 2)
check("unknown declaration is exit 2", run(["ktheory"], "foo bar\n").returncode == 2)
check("domain error is exit 1", run(["dual"], data("ex71.graph")).returncode == 1)
check("invalid graph is exit 1", run(["classify"], "edge e v w\n").returncode == 1)
check("unknown flag is exit 2", run(["classify", "--nope"], "").returncode == 2)
check("unknown subcommand is exit 2", run(["frobnicate"], "").returncode == 2)
check("bad path literal is exit 2", run(["orbit", "zzz"], data("uw.graph")).returncode == 2)
check("check exit 0", run(["check", "--seed", "5", "--cases", "4"], "").returncode == 0)

# ---- byte stability ----
for args, payload in [(["classify"], data("ex71.graph")),
                      (["iterate", "--k", "2"], data("uw.graph")),
                      (["check", "--seed", "9", "--cases", "3"], ""),
                      (["boundary", "--max-len", "2", "--max-cycle", "2"], data("loop.graph"))]:
    a = run(args, payload)
    b = run(args, payload)
    check(f"stable bytes: {' '.join(args)}", a.stdout == b.stdout and a.returncode == b.returncode)

# ---- JSON outputs validate against the committed schema ----
json_runs = [
    (["classify", "--json"], data("ex71.graph")),
    (["dual", "--json"], data("loop.graph")),
    (["iterate", "--k", "1", "--json"], data("loop.graph")),
    (["paths", "--json"], data("loop.graph")),
    (["boundary", "--json"], data("uw.graph")),
    (["orbit", "u", "--json"], data("uw.graph")),
    (["isotropy", "|(e)^ω", "--json"], data("loop.graph")),
    (["ktheory", "--json"], data("ex71.graph")),
    (["unital", "--json"], data("ex72.graph")),
    (["iso", f"{DATA}/loop.graph", f"{DATA}/loop.graph", "--json"], ""),
    (["check", "--seed", "3", "--cases", "2", "--json"], ""),
]
for args, payload in json_runs:
    r = run(args, payload)
    ok = r.returncode == 0
    doc = None
    if ok:
        try:
            doc = json.loads(r.stdout)
        except json.JSONDecodeError:
            ok = False
    check(f"json schema: {args[0]}", ok and valid(doc, SCHEMA), r.stdout[:120])

# Round trip through the dual command's graph payload.
r = run(["dual", "--json"], data("loop.graph"))
doc = json.loads(r.stdout)
r2 = run(["classify"], doc["graph"])
check("dual json payload reparses", r2.returncode == 0)

if failures:
    print(f"{len(failures)} CLI check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
