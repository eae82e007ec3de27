# q=3  [16,4,{9,12}] code H1, SRG(81,32,13,12)
0111111111111000
1000011111220100
1111200012010010
1012001210110001
