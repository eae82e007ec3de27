# q=2  SRG(64,28,12,12) H1
0000000111111111111111100000
0011111000000000111111010000
0100011000001111001111001000
1001100000110011110011000100
0110001011010001011101000010
1010111101000101000101000001
