# Ring-theoretic and semi-cone graph families
