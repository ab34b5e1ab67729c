"""
Small builders shared by the test modules.
"""

from models.params import ModelParams
from models.solution import Family, SolutionSpec
from solutions import instantiate


def make_solution(family, form="primary", constants=None, **params):
    """Instantiate a catalogue member from keyword coefficients."""
    spec = SolutionSpec(Family.parse(family), ModelParams(**params), dict(constants or {}), form=form)
    return instantiate(spec)
