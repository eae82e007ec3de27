# q=3 k=4 matrix=srg81_30_H1 complement=yes array={46;8} method=milp seed=0
0000
0020
0122
0201
1000
1111
1200
1211
2000
2110
2122
2202
