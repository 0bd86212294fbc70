"""Implementation of exact rational expression parsing."""
import ast
import operator as op
from fractions import Fraction
from functools import singledispatch
from typing import Any, Callable, Dict

operator_map: Dict[Any, Callable] = {
    ast.USub: op.neg,
    ast.UAdd: op.pos,
    ast.Sub: op.sub,
    ast.Add: op.add,
    ast.Mult: op.mul,
    ast.Div: op.truediv,
}


def eval_rational(expr: str) -> Fraction:
    """Evaluate given arithmetic expression exactly.

    :param expr: arithmetic expression to parse. The expression can contain parentheses,
     integer or decimal literals, binary operators - + * / and unary minus. Division is exact,
     so "1/6" evaluates to Fraction(1, 6) and not to a float.
    :return: value of the evaluated expression.
    :raise ValueError: if the expression is not a valid rational expression.
    """
    try:
        return Fraction(_eval_node(ast.parse(expr.strip(), mode="eval").body))
    except (SyntaxError, TypeError, ZeroDivisionError) as e:
        raise ValueError(f"Invalid rational expression: {expr}") from e


@singledispatch
def _eval_node(node):
    raise TypeError(f"Unsupported node type {type(node)}")


@_eval_node.register
def _eval_number(node: ast.Constant):
    if isinstance(node.value, bool) or not isinstance(node.value, (int, float)):
        raise TypeError(f"Unsupported literal {node.value!r}")
    # repr keeps decimal literals exact, e.g. 0.1 -> 1/10
    return Fraction(repr(node.value))


@_eval_node.register
def _eval_binary_operator(node: ast.BinOp):
    if type(node.op) not in operator_map:
        raise TypeError(f"Unsupported operator {type(node.op)}")
    return operator_map[type(node.op)](_eval_node(node.left), _eval_node(node.right))


@_eval_node.register
def _eval_unary_operator(node: ast.UnaryOp):
    if type(node.op) not in operator_map:
        raise TypeError(f"Unsupported operator {type(node.op)}")
    return operator_map[type(node.op)](_eval_node(node.operand))
