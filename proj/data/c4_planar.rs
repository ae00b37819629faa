vertices 4
edge 0 1 0
edge 1 2 0
edge 2 3 0
edge 0 3 0
rotation 0: 1 3
rotation 1: 0 2
rotation 2: 1 3
rotation 3: 0 2
