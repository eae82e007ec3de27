# q=3  [16,4,{9,12}] code H4
0111111111111000
1000011111220100
1111200012010010
2012001211010001
