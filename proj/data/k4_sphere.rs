# K4 on the sphere: four triangles
vertices 4
edge 0 1 0
edge 0 2 0
edge 0 3 0
edge 1 2 0
edge 1 3 0
edge 2 3 0
rotation 0: 1 2 3
rotation 1: 0 3 2
rotation 2: 0 1 3
rotation 3: 0 2 1
