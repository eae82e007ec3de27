# q=3  [16,4,{9,12}] code H2
0111111111111000
1000011111220100
1001200112110010
1121001010120001
