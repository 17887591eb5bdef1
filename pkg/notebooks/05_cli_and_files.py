# %% [markdown]
# # Command line and files
#
# Every command prints text by default or JSON with `--json`.  The exit
# status is 1 when a named check fails and 2 for bad flags.

# %%
import io
import json
import tempfile
from pathlib import Path

from hesspatch.cli import run
from hesspatch.hessenberg import HessenbergFunction, hess_generators
from hesspatch.io import read_ideal, write_ideal

buf = io.StringIO()
print(run(["gens", "--n", "5", "--h", "2,3,4,5,5"], buf))
print(buf.getvalue())

# %%
buf = io.StringIO()
run(["gvd-cert", "--n", "4", "--h", "2,3,4,4", "--json"], buf)
print(json.loads(buf.getvalue())["terminal"])

# %% [markdown]
# Ideals round-trip through JSON, and `--ideal` feeds a file to `gb` or `tci`.

# %%
path = Path(tempfile.mkdtemp()) / "h.json"
write_ideal(hess_generators(4, None, HessenbergFunction((2, 3, 4, 4))).ideal(), path, n=4)
print(read_ideal(path).gens)
buf = io.StringIO()
print(run(["tci", "--ideal", str(path)], buf), buf.getvalue())

# %% [markdown]
# The explorer looks at other charts under user chosen lex orders.

# %%
buf = io.StringIO()
run(["explore", "--n", "4", "--w", "2,1,4,3", "--h", "2,3,4,4",
     "--orders", "row-major,col-major,reverse"], buf)
print(buf.getvalue())
