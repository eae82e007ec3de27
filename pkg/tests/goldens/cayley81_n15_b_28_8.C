# q=3 k=4 matrix=cayley81_n15_b complement=no array={28;8} method=heuristic seed=1
0000
0001
0012
0022
0102
0110
0111
0122
0202
0212
0220
0221
1001
1111
1221
2000
2110
2220
