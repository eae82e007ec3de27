# q=2  SRG(64,28,12,12) H4
0000000111111111111111100000
1111111000000011111111010000
0000111000011100011111001000
0011001001100111100011000100
0100011110001001101101000010
1001001010111100100101000001
