# q=2  SRG(64,28,12,12) H3
0000000111111111111111100000
1111111000000011111111010000
0000111000011100011111001000
0001011001100101100111000100
0110001010001110111001000010
1010001110100001101011000001
