"""minidl: dynamic-logic verification for a Java-like mini-language with
abrupt completion.

Subpackages:
    lang     -- AST, parser, printer, prefix/active/rest decomposition
    logic    -- terms, formulae, box modalities, parallel updates
    interp   -- completion-typed concrete interpreter (the oracle)
    calculus -- symbolic-execution sequent rules, loop rules
    prover   -- proof search, bounded-domain goal closing, harnesses
    cli      -- the `minidl` command
"""

__version__ = "0.1.0"
