from ordinal_lab.exceptions import OrdinalLabError


class OrdinalError(OrdinalLabError):
    """Malformed Cantor normal form or an operation outside its domain."""


class ExpressionSyntaxError(OrdinalLabError):
    """Syntax error in an ordinal expression, annotated with its position."""

    def __init__(self, message, position, text=''):
        self.position = position
        self.text = text
        super().__init__(f'{message} at position {position}')

    def caret(self):
        """Two-line rendering of the offending text with a marker under the position."""
        return f'{self.text}\n{" " * self.position}^'
