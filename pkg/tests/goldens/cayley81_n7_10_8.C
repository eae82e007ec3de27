# q=3 k=4 matrix=cayley81_n7 complement=no array={10;8} method=exact seed=0
0000
0001
0011
0022
0102
0110
0120
0121
0201
0210
0212
0222
1000
1010
1021
1022
1102
1111
1112
1120
1200
1201
1212
1221
2000
2011
2012
2022
2101
2102
2111
2120
2202
2210
2220
2221
