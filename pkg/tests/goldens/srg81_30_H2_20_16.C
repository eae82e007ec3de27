# q=3 k=4 matrix=srg81_30_H2 complement=no array={20;16} method=milp seed=0
0000
0001
0012
0020
0022
0110
0111
0112
0120
0121
0200
0201
0202
0211
0222
1001
1021
1102
1112
1210
1220
2000
2010
2011
2012
2022
2100
2101
2102
2120
2121
2202
2210
2211
2221
2222
