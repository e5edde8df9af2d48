"""Built-in Gram matrices (generated by scripts/make_gram_data.py)."""

E8 = [[2, -1, 0, 0, 0, 0, 0, 0], [-1, 2, -1, 0, 0, 0, 0, 0], [0, -1, 2, -1, 0, 0, 0, -1],
 [0, 0, -1, 2, -1, 0, 0, 0], [0, 0, 0, -1, 2, -1, 0, 0], [0, 0, 0, 0, -1, 2, -1, 0],
 [0, 0, 0, 0, 0, -1, 2, 0], [0, 0, -1, 0, 0, 0, 0, 2]]

D16PLUS = [[2, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0], [0, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1],
 [1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0], [1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
 [1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0], [1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
 [1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 0], [1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 0],
 [1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 0], [1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 0],
 [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 0], [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 0],
 [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 0], [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 0],
 [1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 4, -3],
 [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -3, 4]]

LEECH = [[4, 0, 2, 2, 2, 2, 2, 2, 2, 0, 2, 1, 1, 1, 2, 0, 2, 1, 1, 1, 0, 0, -1, -1],
 [0, 4, 2, 2, 2, 2, 2, 2, 0, 2, 2, -1, -1, -1, 0, 2, 0, 1, 1, -1, 0, 0, 2, -2],
 [2, 2, 4, 2, 2, 2, 2, 2, 2, 0, 2, 1, -1, 1, 1, 1, 1, 1, 2, 0, 1, 0, 1, -1],
 [2, 2, 2, 4, 2, 2, 2, 2, 2, 0, 2, 1, -1, 0, 1, 1, 1, 2, 2, 1, 0, 1, 1, -1],
 [2, 2, 2, 2, 4, 2, 2, 2, 2, 0, 2, 1, -1, 0, 1, 1, 2, 2, 1, 1, 1, 0, 1, -2],
 [2, 2, 2, 2, 2, 4, 2, 2, 1, 1, 2, 1, -1, 0, 2, 0, 1, 2, 2, 0, 1, 1, 1, -2],
 [2, 2, 2, 2, 2, 2, 4, 2, 1, 1, 2, 0, 0, 1, 2, 0, 1, 1, 2, 1, 0, 1, 1, -1],
 [2, 2, 2, 2, 2, 2, 2, 4, 2, 0, 2, 0, 0, 1, 2, 0, 1, 2, 2, 1, 1, 0, 1, -2],
 [2, 0, 2, 2, 2, 1, 1, 2, 4, -2, 1, 2, -1, 2, 2, -1, 2, 2, 2, 2, 2, 1, 1, -1],
 [0, 2, 0, 0, 0, 1, 1, 0, -2, 4, 1, -2, 1, -1, 0, 1, 0, -1, -1, -2, -1, 0, 0, -1],
 [2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 4, 1, -1, 1, 1, 1, 2, 1, 2, 1, 1, 1, 1, -2],
 [1, -1, 1, 1, 1, 1, 0, 0, 2, -2, 1, 4, -2, 2, 1, -1, 2, 2, 2, 2, 2, 2, 1, 0],
 [1, -1, -1, -1, -1, -1, 0, 0, -1, 1, -1, -2, 4, 0, 0, 0, 0, -1, -2, -1, -2, -1, -2, 1],
 [1, -1, 1, 0, 0, 0, 1, 1, 2, -1, 1, 2, 0, 4, 2, -2, 2, 1, 2, 2, 2, 2, 1, 0],
 [2, 0, 1, 1, 1, 2, 2, 2, 2, 0, 1, 1, 0, 2, 4, -2, 2, 2, 2, 2, 2, 2, 1, -1],
 [0, 2, 1, 1, 1, 0, 0, 0, -1, 1, 1, -1, 0, -2, -2, 4, 0, 0, -1, -1, -1, -1, 0, 0],
 [2, 0, 1, 1, 2, 1, 1, 1, 2, 0, 2, 2, 0, 2, 2, 0, 4, 2, 1, 2, 2, 2, 1, -1],
 [1, 1, 1, 2, 2, 2, 1, 2, 2, -1, 1, 2, -1, 1, 2, 0, 2, 4, 2, 2, 2, 2, 2, -1],
 [1, 1, 2, 2, 1, 2, 2, 2, 2, -1, 2, 2, -2, 2, 2, -1, 1, 2, 4, 2, 2, 2, 2, -1],
 [1, -1, 0, 1, 1, 0, 1, 1, 2, -2, 1, 2, -1, 2, 2, -1, 2, 2, 2, 4, 2, 2, 1, 0],
 [0, 0, 1, 0, 1, 1, 0, 1, 2, -1, 1, 2, -2, 2, 2, -1, 2, 2, 2, 2, 4, 2, 2, -1],
 [0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 2, -1, 2, 2, -1, 2, 2, 2, 2, 2, 4, 2, 0],
 [-1, 2, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, -2, 1, 1, 0, 1, 2, 2, 1, 2, 2, 4, -2],
 [-1, -2, -1, -1, -2, -2, -1, -2, -1, -1, -2, 0, 1, 0, -1, 0, -1, -1, -1, 0, -1, 0, -2, 4]]
