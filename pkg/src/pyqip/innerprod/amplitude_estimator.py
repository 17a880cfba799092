import math
from pyqip.sim import CircuitProgram
from pyqip.logger import logger

def estimate_magnitude(program: CircuitProgram, shots: int, seed: int) -> float:
    """
    Shot-frequency estimate sqrt(count(0)/shots) of |<0|program|0>|.

    Only the magnitude is observable this way; callers recover the sign from the
    structure of their problem.
    """
    histogram = program.run().sample(shots, seed)
    magnitude = math.sqrt(histogram.get(0, 0) / shots)
    logger().debug(f"|0> observed {histogram.get(0, 0)}/{shots} times, magnitude {magnitude:.6f}")
    return magnitude
