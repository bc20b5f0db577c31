"""RIS-aided vehicular network simulator with AoI tracking and a SAC controller.

The package is organised as a small numpy library:

- ``mobility``   road grid, vehicle kinematics, V2V pairing
- ``channel``    large-scale/fast-fading channel primitives and the RIS cascade
- ``phy``        SINR, rates, AoI evolution and payload bookkeeping
- ``env``        episodic environment (state / action / reward)
- ``nn``         minimal dense network stack (forward, backward, Adam)
- ``sac``        soft actor-critic (twin critics, auto temperature, replay)
- ``baselines``  random resource-allocation policies (with and without RIS)
- ``harness``    training runs, evaluation sweeps, result persistence
- ``config``     experiment configuration and the plain-text config format
"""

__version__ = "0.1.0"

from .config import ExperimentConfig

__all__ = ["ExperimentConfig", "__version__"]
