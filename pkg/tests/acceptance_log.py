"""Lines written by the acceptance criteria, printed in the terminal summary."""

LINES = []
