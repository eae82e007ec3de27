# q=3  [16,4,{9,12}] code H3
0111111111111000
1000011111220100
1111200012010010
0012101201220001
