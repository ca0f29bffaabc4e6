"""Square-tiled surfaces: enumeration, SL(2,Z)-orbits, cylinders, spin
parity and exact Lyapunov exponent sums."""
