# q=3 k=4
0000
2211
1012
0121
1220
2102
