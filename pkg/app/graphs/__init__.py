# Undirected graphs: invariants, planarity, JSON/DOT codecs
