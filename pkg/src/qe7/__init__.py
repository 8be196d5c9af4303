"""qe7: exact finite algebra for qubit symmetry groups.

The package constructs, entirely in exact arithmetic, the finite structures
attached to k qubits: the Heisenberg group and its Schroedinger
representation, the Clifford normalizer and its image in Sp(2k, F2),
quadratic and alternating forms with their sum-of-squares identities, and
for k = 3 the E7 root system realized in the Picard lattice of a degree-two
Del Pezzo surface, with the Fano-plane decomposition of the 56-dimensional
representation.
"""

__version__ = "0.1.0"
