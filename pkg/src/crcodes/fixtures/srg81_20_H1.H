# q=3  two-weight (10,4,{6,9}) code, SRG(81,20,1,6)
0111111000
1011220100
1102120010
1120210001
