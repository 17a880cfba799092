import numpy as np

def matched_normal_deviation(probabilities) -> float:
    """
    Largest pointwise gap between a distribution over k = 0..N-1 and the discrete
    normal with the same mean and variance, renormalized over the same keys.
    """
    probabilities = np.asarray(probabilities, dtype=np.float64)
    probabilities = probabilities / probabilities.sum()
    keys = np.arange(probabilities.shape[0], dtype=np.float64)
    mean = float(np.dot(probabilities, keys))
    variance = float(np.dot(probabilities, (keys - mean) ** 2))
    density = np.exp(-0.5 * (keys - mean) ** 2 / variance)
    density /= density.sum()
    return float(np.max(np.abs(probabilities - density)))
