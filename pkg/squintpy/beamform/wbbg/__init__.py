from .optimizer import WbbgOptimizer, wbbg_optimize
from .problem import EpigraphProblem, NloptProblem
from .solution import WbbgOptions, WbbgSolution
from .summary import WbbgSummary
