# q=3 k=4 matrix=cayley81_n15_a complement=no array={28;8} method=heuristic seed=1
0000
0022
0101
0112
0211
0220
1012
1021
1101
1120
1202
1210
2000
2011
2110
2122
2202
2221
