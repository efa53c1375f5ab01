"""Text rendering of linear combinations in the expression syntax."""


def format_scalar(c) -> str:
    return str(c)


def format_linear_combination(terms, field=None) -> str:
    """Render ``[(monomial, coef), ...]``; monomial ``"1"`` stands for the identity.

    The output reparses under the expression grammar.
    """
    parts = []
    for mono, c in terms:
        if c == 0:
            continue
        s = format_scalar(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        if mono == "1":
            body = s
        elif s == "1":
            body = mono
        else:
            body = f"{s}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) or "0"
