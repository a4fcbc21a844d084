"""Mypy plugin for chebball.

``@cases`` turns ``Plus: None`` annotations into singleton instances of the
decorated family. The plugin retypes those attributes as the family itself so
``Sign.Plus`` checks as ``Sign`` rather than ``None``.
"""

from typing import Callable, Type as TypingType

from mypy.nodes import Var
from mypy.plugin import ClassDefContext, Plugin
from mypy.plugins.common import add_attribute_to_class
from mypy.types import Instance

CASES_DECORATORS = (
    "chebball.operand.cases.cases",
    "chebball.operand.cases",
)


def _cases_class_callback(ctx: ClassDefContext) -> None:
    """Give every public annotated attribute the family's instance type."""
    cls = ctx.cls
    family = Instance(cls.info, [])

    for name, node in list(cls.info.names.items()):
        if name.startswith("_"):
            continue
        if not isinstance(node.node, Var):
            continue
        add_attribute_to_class(
            ctx.api,
            cls,
            name,
            family,
            final=True,
            is_classvar=True,
            override_allow_incompatible=True,
            overwrite_existing=True,
        )


class ChebballPlugin(Plugin):
    """Handles @cases tag families."""

    def get_class_decorator_hook(
        self, fullname: str
    ) -> Callable[[ClassDefContext], None] | None:
        if fullname in CASES_DECORATORS:
            return _cases_class_callback
        return None


def plugin(version: str) -> TypingType[Plugin]:
    """Entry point for mypy plugin system."""
    return ChebballPlugin
