# Posets, orientations, Mirsky levels and labeled enumeration
