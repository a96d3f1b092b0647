# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.cli.util module.

"""


# =============================================================================
class SpecifyOrderedGroup_listCommands:
    """
    Spec for the OrderedGroup.list_commands method.

    """

    # -------------------------------------------------------------------------
    def it_returns_commands_in_definition_order(self):
        """
        OrderedGroup.list_commands returns commands in order.

        """
        import click                # pylint: disable=C0415
        import levychaos.cli.util  # pylint: disable=C0415

        tup_names = ('C3', 'C1', 'C2')
        group = levychaos.cli.util.OrderedGroup()

        for name in tup_names:
            group.add_command(click.Command(name = name))
        outputs = list(group.list_commands(ctx = None))

        assert tuple(outputs) == tup_names
