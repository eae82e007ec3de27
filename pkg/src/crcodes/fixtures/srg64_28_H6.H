# q=2  SRG(64,28,12,12) H6
0000000111111111111111100000
1111111000000011111111010000
0000111000011100011111001000
0011001001100111100011000100
0100011010101001100111000010
1001100100011010101101000001
